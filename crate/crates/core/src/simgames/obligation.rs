use std::fmt;

use crate::game::{reward_leq, Priority};

/// The pending obligation of a delayed simulation play: either a priority
/// Duplicator still has to answer, or `Met` when nothing is pending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obligation {
    Pending(Priority),
    Met,
}

impl Obligation {
    fn at_least(self, n: Priority) -> bool {
        matches!(self, Obligation::Pending(k) if n <= k)
    }

    fn below(self, n: Priority) -> bool {
        matches!(self, Obligation::Pending(k) if k < n)
    }
}

impl fmt::Display for Obligation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obligation::Pending(k) => write!(f, "{k}"),
            Obligation::Met => write!(f, "✓"),
        }
    }
}

/// Which obligation update a delayed simulation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bias {
    None,
    Even,
    Odd,
}

impl Bias {
    pub const ALL: [Bias; 3] = [Bias::None, Bias::Even, Bias::Odd];

    /// The update for Spoiler-side priority `n`, Duplicator-side priority `m`
    /// and current obligation `k`.
    pub fn update(self, n: Priority, m: Priority, k: Obligation) -> Obligation {
        match self {
            Bias::None => gamma(n, m, k),
            Bias::Even => gamma_even(n, m, k),
            Bias::Odd => gamma_odd(n, m, k),
        }
    }
}

/// The obligation update of the delayed simulation game.
pub fn gamma(n: Priority, m: Priority, k: Obligation) -> Obligation {
    match k {
        Obligation::Met => {
            if reward_leq(m, n) {
                Obligation::Met
            } else {
                Obligation::Pending(n.min(m))
            }
        }
        Obligation::Pending(k) => {
            let fulfilled = (n % 2 == 1 && n <= k) || (m.is_multiple_of(2) && m <= k);
            if reward_leq(m, n) && fulfilled {
                Obligation::Met
            } else {
                Obligation::Pending(n.min(m).min(k))
            }
        }
    }
}

/// Even-biased update: a small odd priority on Spoiler's side leaves the
/// obligation untouched instead of discharging it.
pub fn gamma_even(n: Priority, m: Priority, k: Obligation) -> Obligation {
    if gamma_even_keeps(n, m, k) {
        k
    } else {
        gamma(n, m, k)
    }
}

/// Odd-biased update: a small even priority on Duplicator's side leaves the
/// obligation untouched instead of discharging it.
pub fn gamma_odd(n: Priority, m: Priority, k: Obligation) -> Obligation {
    if gamma_odd_keeps(n, m, k) {
        k
    } else {
        gamma(n, m, k)
    }
}

pub(crate) fn gamma_even_keeps(n: Priority, m: Priority, k: Obligation) -> bool {
    reward_leq(m, n) && n % 2 == 1 && k.at_least(n) && (m % 2 == 1 || k.below(m))
}

pub(crate) fn gamma_odd_keeps(n: Priority, m: Priority, k: Obligation) -> bool {
    reward_leq(m, n) && m.is_multiple_of(2) && k.at_least(m) && (n.is_multiple_of(2) || k.below(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Obligation::{Met, Pending};

    #[test]
    fn gamma_examples() {
        for n in 0..6 {
            assert_eq!(gamma(n, n, Met), Met);
        }
        assert_eq!(gamma(0, 1, Met), Pending(0));
        assert_eq!(gamma(3, 0, Pending(2)), Met);
        assert_eq!(gamma(2, 2, Pending(1)), Pending(1));
        assert_eq!(gamma(1, 1, Pending(0)), Pending(0));
    }

    #[test]
    fn biased_examples() {
        assert_eq!(gamma_even(1, 1, Pending(3)), Pending(3));
        assert_eq!(gamma(1, 1, Pending(3)), Met);
        assert_eq!(gamma_odd(2, 0, Pending(1)), Pending(1));
        assert_eq!(gamma(2, 0, Pending(1)), Met);
        for n in 0..6 {
            for m in 0..6 {
                assert_eq!(gamma_even(n, m, Met), gamma(n, m, Met));
                assert_eq!(gamma_odd(n, m, Met), gamma(n, m, Met));
            }
        }
    }

    fn obligations() -> impl Iterator<Item = Obligation> {
        std::iter::once(Met).chain((0..=8).map(Pending))
    }

    #[test]
    fn results_stay_small() {
        for n in 0..=8 {
            for m in 0..=8 {
                for k in obligations() {
                    let g = gamma(n, m, k);
                    let bound = match k {
                        Met => n.min(m),
                        Pending(k) => n.min(m).min(k),
                    };
                    assert!(g == Met || g == Pending(bound), "γ({n},{m},{k})");
                    for (biased, keeps) in [
                        (gamma_even(n, m, k), gamma_even_keeps(n, m, k)),
                        (gamma_odd(n, m, k), gamma_odd_keeps(n, m, k)),
                    ] {
                        if keeps {
                            assert_eq!(biased, k);
                        } else {
                            assert_eq!(biased, g);
                        }
                        assert!(biased == Met || biased <= Pending(8));
                    }
                }
            }
        }
    }
}
