use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// Comparison rule on exponent vectors.
///
/// `RevLex` on its own is not a well-order; it is accepted only as the
/// tie-breaker of a weighted order or inside such a tie-breaker.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    RevLex,
    /// Variables `[0, split)` compared by `head`, ties broken on the rest by
    /// `tail`. Eliminates the leading block.
    Block {
        split: usize,
        head: Box<MonomialOrder>,
        tail: Box<MonomialOrder>,
    },
    /// Weighted degree first, then `tie`.
    Weighted {
        weights: Vec<u32>,
        tie: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(split: usize, head: MonomialOrder, tail: MonomialOrder) -> Self {
        MonomialOrder::Block {
            split,
            head: Box::new(head),
            tail: Box::new(tail),
        }
    }

    pub fn weighted(weights: Vec<u32>, tie: MonomialOrder) -> Self {
        MonomialOrder::Weighted {
            weights,
            tie: Box::new(tie),
        }
    }

    /// Weighted degree, then reverse lexicographic: among monomials of equal
    /// weight the one with the smaller power of the last variable wins.
    pub fn weighted_revlex(weights: Vec<u32>) -> Self {
        Self::weighted(weights, MonomialOrder::RevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::RevLex => revlex(a, b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            MonomialOrder::Block { split, head, tail } => head
                .cmp_exps(&a[..*split], &b[..*split])
                .then_with(|| tail.cmp_exps(&a[*split..], &b[*split..])),
            MonomialOrder::Weighted { weights, tie } => {
                let wa: u64 = a
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as u64 * w as u64)
                    .sum();
                let wb: u64 = b
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as u64 * w as u64)
                    .sum();
                wa.cmp(&wb).then_with(|| tie.cmp_exps(a, b))
            }
        }
    }

    /// Checks that the order is a monomial well-order on `arity` variables.
    pub fn validate(&self, arity: usize) -> Result<(), String> {
        self.check(arity, true)
    }

    fn check(&self, arity: usize, need_well_order: bool) -> Result<(), String> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => Ok(()),
            MonomialOrder::RevLex if need_well_order => {
                Err("revlex is only valid as a tie-breaker after positive weights".into())
            }
            MonomialOrder::RevLex => Ok(()),
            MonomialOrder::Block { split, head, tail } => {
                if *split > arity {
                    return Err(format!("block split {split} exceeds {arity} variables"));
                }
                head.check(*split, need_well_order)?;
                tail.check(arity - split, need_well_order)
            }
            MonomialOrder::Weighted { weights, tie } => {
                if weights.len() != arity {
                    return Err(format!("{} weights for {arity} variables", weights.len()));
                }
                if weights.contains(&0) {
                    return Err("weights must be strictly positive".into());
                }
                tie.check(arity, false)
            }
        }
    }

    /// Whether every nonzero monomial of positive (weighted) degree is larger
    /// than any monomial of smaller degree, for the given grading.
    pub fn respects_grading(&self, grading: &[u32]) -> bool {
        match self {
            MonomialOrder::Grevlex => grading.iter().all(|&w| w == 1),
            MonomialOrder::Weighted { weights, .. } => weights.as_slice() == grading,
            _ => false,
        }
    }
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::RevLex => f.write_str("revlex"),
            MonomialOrder::Block { split, head, tail } => {
                write!(f, "block({split}; {head}, {tail})")
            }
            MonomialOrder::Weighted { weights, tie } => write!(f, "weighted({weights:?}; {tie})"),
        }
    }
}
