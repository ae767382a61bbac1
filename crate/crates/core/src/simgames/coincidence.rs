use std::fmt;
use std::str::FromStr;

use crate::equivalences::{direct_sim, governed_bisim, gstut_bisim, wf_delayed_sim};
use crate::game::ParityGame;

use super::{delayed_sim, direct_sim_game, governed_bisim_game, gstut_via_game, Bias};

/// A relation with both a fixpoint and a game characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Notion {
    Direct,
    GovernedBisim,
    Gstut,
    Delayed,
    DelayedEven,
    DelayedOdd,
}

impl Notion {
    pub const ALL: [Notion; 6] = [
        Notion::Direct,
        Notion::GovernedBisim,
        Notion::Gstut,
        Notion::Delayed,
        Notion::DelayedEven,
        Notion::DelayedOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Notion::Direct => "direct",
            Notion::GovernedBisim => "governed-bisim",
            Notion::Gstut => "gstut",
            Notion::Delayed => "delayed",
            Notion::DelayedEven => "delayed-even",
            Notion::DelayedOdd => "delayed-odd",
        }
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Notion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Notion::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| format!("unknown notion '{s}'"))
    }
}

/// True iff the game-based and the fixpoint-based relation agree on `game`.
pub fn coincidence_check(game: &ParityGame, notion: Notion) -> bool {
    match notion {
        Notion::Direct => direct_sim_game(game) == direct_sim(game),
        Notion::GovernedBisim => governed_bisim_game(game).is_ok_and(|p| p == governed_bisim(game)),
        Notion::Gstut => gstut_via_game(game).is_ok_and(|p| p == gstut_bisim(game)),
        Notion::Delayed => delayed_sim(game, Bias::None) == wf_delayed_sim(game, Bias::None),
        Notion::DelayedEven => delayed_sim(game, Bias::Even) == wf_delayed_sim(game, Bias::Even),
        Notion::DelayedOdd => delayed_sim(game, Bias::Odd) == wf_delayed_sim(game, Bias::Odd),
    }
}
