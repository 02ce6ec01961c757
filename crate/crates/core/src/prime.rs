//! Monomial primes: ideals generated by a subset of the variables.

use crate::context::VariableContext;
use crate::error::IdealError;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

impl MonomialPrime {
    /// A prime from its variable indices; the empty set is rejected.
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> Result<Self, IdealError> {
        let mut support: Vec<usize> = vars.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(IdealError::Parameter("a monomial prime needs a nonempty support".into()));
        }
        Ok(Self { support })
    }

    /// Convenience constructor from variable names.
    pub fn of_names(ctx: &VariableContext, names: &[&str]) -> Result<Self, IdealError> {
        let vars = names
            .iter()
            .map(|n| {
                ctx.index_of(n)
                    .ok_or_else(|| IdealError::Parameter(format!("unknown variable {n:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars)
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut support = self.support.clone();
        support.extend_from_slice(&other.support);
        support.sort_unstable();
        support.dedup();
        Self { support }
    }

    /// Indices outside the support, relative to `arity` variables.
    pub fn complement(&self, arity: usize) -> Vec<usize> {
        (0..arity).filter(|i| !self.contains_var(*i)).collect()
    }

    pub fn to_ideal(&self, ctx: &VariableContext) -> Result<MonomialIdeal, IdealError> {
        let arity = ctx.arity();
        if let Some(&bad) = self.support.iter().find(|&&i| i >= arity) {
            return Err(IdealError::Parameter(format!("variable index {bad} out of range")));
        }
        let gens = self.support.iter().map(|&i| Monomial::variable(i, arity)).collect();
        MonomialIdeal::new(ctx.clone(), gens)
    }

    pub fn render(&self, ctx: &VariableContext) -> String {
        let names: Vec<&str> = self.support.iter().map(|&i| ctx.name(i)).collect();
        format!("({})", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_support() {
        let p = MonomialPrime::new([2, 0, 2]).unwrap();
        assert_eq!(p.support(), &[0, 2]);
        assert!(MonomialPrime::new([]).is_err());
    }

    #[test]
    fn union_and_complement() {
        let p = MonomialPrime::new([0]).unwrap();
        let q = MonomialPrime::new([2]).unwrap();
        assert_eq!(p.union(&q).support(), &[0, 2]);
        assert_eq!(p.complement(3), vec![1, 2]);
    }

    #[test]
    fn to_ideal_checks_range() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let p = MonomialPrime::new([0, 1]).unwrap();
        assert_eq!(p.to_ideal(&ctx).unwrap().render(), "(x, y)");
        let bad = MonomialPrime::new([5]).unwrap();
        assert!(bad.to_ideal(&ctx).is_err());
    }
}
