use std::borrow::Cow;
use std::fmt;
use std::sync::Arc;

use super::MonomialOrder;
use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldKind};

/// Default cap on reduction steps in a single Groebner computation.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// A polynomial ring `k[x1, ..., xn]` together with the active monomial
/// order, optional variable weights and the Groebner step budget.
///
/// The local ring at the origin is never materialised: containments in the
/// localisation are tested in the polynomial ring, which is faithful for the
/// graded and quasihomogeneous ideals this crate targets.
#[derive(Clone, Debug)]
pub struct Ring<F: Field> {
    field: F::Kind,
    vars: Vec<String>,
    weights: Option<Vec<u32>>,
    order: MonomialOrder,
    budget: u64,
}

pub type RingRef<F> = Arc<Ring<F>>;

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.weights == other.weights
            && self.order == other.order
    }
}

impl<F: Field> Eq for Ring<F> {}

impl<F: Field> Ring<F> {
    pub fn new<S: AsRef<str>>(field: F::Kind, vars: &[S]) -> Result<RingRef<F>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(AlgebraError::Precondition(format!(
                    "invalid variable name {v:?}"
                )));
            }
            if vars[..i].contains(v) {
                return Err(AlgebraError::Precondition(format!(
                    "duplicate variable {v}"
                )));
            }
        }
        Ok(Arc::new(Ring {
            field,
            vars,
            weights: None,
            order: MonomialOrder::Grevlex,
            budget: DEFAULT_STEP_BUDGET,
        }))
    }

    /// Ring on `x1, ..., xn`.
    pub fn with_indexed_vars(field: F::Kind, prefix: &str, n: usize) -> Result<RingRef<F>> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(field, &names)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        order
            .validate(self.arity())
            .map_err(AlgebraError::Precondition)?;
        Ok(Arc::new(Ring {
            order,
            ..self.clone()
        }))
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<RingRef<F>> {
        if weights.len() != self.arity() || weights.contains(&0) {
            return Err(AlgebraError::Precondition(format!(
                "need {} strictly positive weights, got {weights:?}",
                self.arity()
            )));
        }
        Ok(Arc::new(Ring {
            weights: Some(weights),
            ..self.clone()
        }))
    }

    pub fn without_weights(&self) -> RingRef<F> {
        Arc::new(Ring {
            weights: None,
            ..self.clone()
        })
    }

    pub fn with_budget(&self, budget: u64) -> RingRef<F> {
        Arc::new(Ring {
            budget,
            ..self.clone()
        })
    }

    /// Same ring with `names` prepended as new variables (weight 1) under the
    /// given order.
    pub fn with_leading_vars(&self, names: &[&str], order: MonomialOrder) -> Result<RingRef<F>> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        let weights = self.weights.as_ref().map(|w| {
            let mut v = vec![1; names.len()];
            v.extend_from_slice(w);
            v
        });
        order
            .validate(vars.len())
            .map_err(AlgebraError::Precondition)?;
        Ok(Arc::new(Ring {
            field: self.field.clone(),
            vars,
            weights,
            order,
            budget: self.budget,
        }))
    }

    /// Same ring with the variables listed in `perm` order (position `k` of
    /// the new ring is variable `perm[k]` of this one).
    pub fn permuted(&self, perm: &[usize], order: MonomialOrder) -> Result<RingRef<F>> {
        let vars = perm.iter().map(|&i| self.vars[i].clone()).collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| perm.iter().map(|&i| w[i]).collect());
        order
            .validate(perm.len())
            .map_err(AlgebraError::Precondition)?;
        Ok(Arc::new(Ring {
            field: self.field.clone(),
            vars,
            weights,
            order,
            budget: self.budget,
        }))
    }

    pub fn field(&self) -> &F::Kind {
        &self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    /// The configured weights, or the standard grading.
    pub fn grading(&self) -> Cow<'_, [u32]> {
        match &self.weights {
            Some(w) => Cow::Borrowed(w),
            None => Cow::Owned(vec![1; self.arity()]),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn check_same(self: &Arc<Self>, other: &Arc<Self>) -> Result<()> {
        if Arc::ptr_eq(self, other) || **self == **other {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }
}

impl<F: Field> fmt::Display for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
