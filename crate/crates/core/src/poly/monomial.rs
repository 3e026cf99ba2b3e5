use smallvec::SmallVec;

/// Dense exponent vector `x1^e1 * ... * xn^en`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity),
        }
    }

    pub fn var(arity: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(arity);
        m.exps[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Reorders the exponents so that position `k` of the result holds the
    /// exponent of variable `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial {
            exps: perm.iter().map(|&i| self.exps[i]).collect(),
        }
    }

    /// Inserts `count` zero exponents at position `at`.
    pub fn widened(&self, at: usize, count: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert_many(at, std::iter::repeat_n(0, count));
        Monomial { exps }
    }

    /// Removes the exponents in `range`.
    pub fn narrowed(&self, range: std::ops::Range<usize>) -> Monomial {
        let mut exps = self.exps.clone();
        exps.drain(range);
        Monomial { exps }
    }
}
