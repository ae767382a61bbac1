//! The equivalences between isomorphism and winner equivalence, and the
//! inclusions between them.

use std::fmt;
use std::str::FromStr;

use crate::equivalences::{
    direct_sim, equivalence_from_preorder, governed_bisim, gstut_bisim, strong_bisim,
    strong_direct_sim, stut_bisim, wf_delayed_sim, winner_partition,
};
use crate::game::{ParityGame, Vertex};
use crate::quotient::{automorphism_partition, IsoError};
use crate::relation::Partition;
use crate::simgames::Bias;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Isomorphism,
    StrongBisim,
    GovernedBisim,
    Stuttering,
    StrongDirectSim,
    GstutBisim,
    DirectSim,
    DelayedEven,
    DelayedOdd,
    Delayed,
    Winner,
}

impl Relation {
    /// All relations, each listed after every relation finer than it.
    pub const ALL: [Relation; 11] = [
        Relation::Isomorphism,
        Relation::StrongBisim,
        Relation::GovernedBisim,
        Relation::Stuttering,
        Relation::StrongDirectSim,
        Relation::GstutBisim,
        Relation::DirectSim,
        Relation::DelayedEven,
        Relation::DelayedOdd,
        Relation::Delayed,
        Relation::Winner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Isomorphism => "isomorphism",
            Relation::StrongBisim => "strong-bisim",
            Relation::GovernedBisim => "governed-bisim",
            Relation::Stuttering => "stut",
            Relation::StrongDirectSim => "strong-direct-sim-equiv",
            Relation::GstutBisim => "gstut",
            Relation::DirectSim => "direct-sim-equiv",
            Relation::DelayedEven => "delayed-sim-even-equiv",
            Relation::DelayedOdd => "delayed-sim-odd-equiv",
            Relation::Delayed => "delayed-sim-equiv",
            Relation::Winner => "winner",
        }
    }

    fn index(self) -> usize {
        Relation::ALL.iter().position(|&r| r == self).unwrap()
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown relation '{s}'"))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The strict inclusions of the lattice, as `(finer, coarser)` pairs.
pub const INCLUSIONS: [(Relation, Relation); 14] = [
    (Relation::Isomorphism, Relation::StrongBisim),
    (Relation::StrongBisim, Relation::GovernedBisim),
    (Relation::StrongBisim, Relation::Stuttering),
    (Relation::StrongBisim, Relation::StrongDirectSim),
    (Relation::StrongDirectSim, Relation::DirectSim),
    (Relation::GovernedBisim, Relation::GstutBisim),
    (Relation::GovernedBisim, Relation::DirectSim),
    (Relation::Stuttering, Relation::GstutBisim),
    (Relation::GstutBisim, Relation::Winner),
    (Relation::DirectSim, Relation::DelayedEven),
    (Relation::DirectSim, Relation::DelayedOdd),
    (Relation::DelayedEven, Relation::Delayed),
    (Relation::DelayedOdd, Relation::Delayed),
    (Relation::Delayed, Relation::Winner),
];

/// Outcome of checking one inclusion on one game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeVerdict {
    pub finer: Relation,
    pub coarser: Relation,
    /// A pair related by `finer` but not by `coarser`.
    pub violation: Option<(Vertex, Vertex)>,
}

impl EdgeVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }

    pub fn edge_name(&self) -> String {
        format!("{} -> {}", self.finer, self.coarser)
    }
}

/// The classes of every relation of the lattice on one game.
#[derive(Clone, Debug)]
pub struct RelationBundle {
    partitions: Vec<Partition>,
}

impl RelationBundle {
    /// Computes every relation. Isomorphism is exact and limited to small games.
    pub fn compute(game: &ParityGame) -> Result<Self, IsoError> {
        let kernel = |r| equivalence_from_preorder(&r).expect("simulations are preorders");
        let partitions = Relation::ALL
            .iter()
            .map(|r| {
                Ok(match r {
                    Relation::Isomorphism => automorphism_partition(game)?,
                    Relation::StrongBisim => strong_bisim(game),
                    Relation::GovernedBisim => governed_bisim(game),
                    Relation::Stuttering => stut_bisim(game),
                    Relation::StrongDirectSim => kernel(strong_direct_sim(game)),
                    Relation::GstutBisim => gstut_bisim(game),
                    Relation::DirectSim => kernel(direct_sim(game)),
                    Relation::DelayedEven => kernel(wf_delayed_sim(game, Bias::Even)),
                    Relation::DelayedOdd => kernel(wf_delayed_sim(game, Bias::Odd)),
                    Relation::Delayed => kernel(wf_delayed_sim(game, Bias::None)),
                    Relation::Winner => winner_partition(game),
                })
            })
            .collect::<Result<_, IsoError>>()?;
        Ok(Self { partitions })
    }

    pub fn get(&self, relation: Relation) -> &Partition {
        &self.partitions[relation.index()]
    }

    /// Replaces the classes of one relation.
    pub fn set(&mut self, relation: Relation, partition: Partition) {
        self.partitions[relation.index()] = partition;
    }

    pub fn related(&self, relation: Relation, v: Vertex, w: Vertex) -> bool {
        self.get(relation).same_class(v, w)
    }

    pub fn check_inclusions(&self) -> Vec<EdgeVerdict> {
        INCLUSIONS
            .iter()
            .map(|&(finer, coarser)| EdgeVerdict {
                finer,
                coarser,
                violation: self.get(finer).separated_pair(self.get(coarser)),
            })
            .collect()
    }
}
