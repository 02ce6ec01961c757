//! Monomial ideals in canonical form.
//!
//! An ideal is stored as its unique minimal generating set, sorted in
//! descending graded-lexicographic order, so structural equality of two
//! values coincides with equality of the ideals they generate. The zero
//! ideal is the empty generator list, the unit ideal is `[1]`.

use crate::context::VariableContext;
use crate::error::IdealError;
use crate::monomial::Monomial;

/// A 64-bit divisibility filter: per coordinate, bit j is set when the
/// exponent reaches 2^j, so `sig(g) & !sig(m) != 0` certifies that g does
/// not divide m.
pub(crate) fn signature_of(exponents: &[u32]) -> u64 {
    let bits = (64 / exponents.len().max(1)).clamp(1, 8) as u32;
    let mut sig = 0u64;
    for (i, &e) in exponents.iter().enumerate() {
        let mut level = 0;
        while level < bits && e >= (1u32 << level) {
            sig |= 1 << (i as u32 * bits + level);
            level += 1;
        }
    }
    sig
}

pub(crate) fn signature(m: &Monomial) -> u64 {
    signature_of(m.exponents())
}

/// Divisibility-minimal subset of `gens`, canonically ordered (largest
/// generator first). Duplicates collapse; a unit generator absorbs the rest.
pub(crate) fn minimalize_vec(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Ascending graded-lex order means a strict divisor always precedes its
    // multiples, and equal-degree elements never divide one another, so each
    // candidate is only tested against kept elements of smaller degree.
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    let mut sigs: Vec<u64> = Vec::new();
    let mut bucket_end = 0;
    let mut bucket_degree = u64::MAX;
    for m in gens {
        let degree = m.degree();
        if degree != bucket_degree {
            bucket_end = kept.len();
            bucket_degree = degree;
        }
        let sig = signature(&m);
        let dominated = kept[..bucket_end]
            .iter()
            .zip(&sigs)
            .any(|(g, gs)| gs & !sig == 0 && g.divides(&m));
        if !dominated {
            kept.push(m);
            sigs.push(sig);
        }
    }
    kept.reverse();
    kept
}

/// Membership of `m` in the ideal generated by a minimalized `gens` list.
pub(crate) fn gens_contain(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    context: VariableContext,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonicalizes a generating set: keeps the divisibility-minimal
    /// generators in graded-lex order. The generated ideal is unchanged.
    pub fn new(context: VariableContext, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.arity() != context.arity() {
                return Err(IdealError::ArityMismatch {
                    expected: context.arity(),
                    found: g.arity(),
                });
            }
        }
        Ok(Self { generators: minimalize_vec(gens), context })
    }

    pub fn zero(context: VariableContext) -> Self {
        Self { context, generators: Vec::new() }
    }

    pub fn unit(context: VariableContext) -> Self {
        let one = Monomial::one(context.arity());
        Self { context, generators: vec![one] }
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn arity(&self) -> usize {
        self.context.arity()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Proper and nonzero: the precondition of alpha, Ass and the v-number.
    pub fn ensure_proper(&self) -> Result<(), IdealError> {
        if self.is_zero() {
            Err(IdealError::ZeroIdeal)
        } else if self.is_unit() {
            Err(IdealError::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_arity(&self, m: &Monomial) -> Result<(), IdealError> {
        if m.arity() != self.arity() {
            return Err(IdealError::ArityMismatch { expected: self.arity(), found: m.arity() });
        }
        Ok(())
    }

    fn check_context(&self, other: &Self) -> Result<(), IdealError> {
        if self.context != other.context {
            return Err(IdealError::ContextMismatch);
        }
        Ok(())
    }

    /// True iff some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.arity(), self.arity());
        gens_contain(&self.generators, m)
    }

    /// The colon ideal `self : u`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> Result<Self, IdealError> {
        self.check_arity(u)?;
        let gens = self.generators.iter().map(|g| g.quotient_by(u)).collect();
        Ok(Self { context: self.context.clone(), generators: minimalize_vec(gens) })
    }

    /// The k-th power, by multiset enumeration of generator products with
    /// incremental pruning of non-minimal products.
    pub fn power(&self, k: u32) -> Result<Self, IdealError> {
        let ctx = self.context.clone();
        if k == 0 {
            return Ok(Self::unit(ctx));
        }
        if self.is_zero() {
            return Ok(Self::zero(ctx));
        }
        let mut kept: Vec<Monomial> = Vec::new();
        let mut stack: Vec<(usize, u32, Monomial)> = vec![(0, k, Monomial::one(self.arity()))];
        while let Some((from, remaining, prefix)) = stack.pop() {
            if remaining == 0 {
                if !gens_contain(&kept, &prefix) {
                    kept.retain(|m| !prefix.divides(m));
                    kept.push(prefix);
                }
                continue;
            }
            for i in from..self.generators.len() {
                let next = prefix.checked_mul(&self.generators[i])?;
                stack.push((i, remaining - 1, next));
            }
        }
        Ok(Self { context: ctx, generators: minimalize_vec(kept) })
    }

    /// Sum of ideals: union of generators, minimalized.
    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_context(other)?;
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ok(Self { context: self.context.clone(), generators: minimalize_vec(gens) })
    }

    /// The ideal `u * self`.
    pub fn scale(&self, u: &Monomial) -> Result<Self, IdealError> {
        self.check_arity(u)?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.checked_mul(u))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { context: self.context.clone(), generators: minimalize_vec(gens) })
    }

    /// Intersection, via pairwise least common multiples.
    pub fn intersect(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_context(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self { context: self.context.clone(), generators: minimalize_vec(gens) })
    }

    /// Initial degree: the least degree of a minimal generator.
    pub fn alpha(&self) -> Result<u64, IdealError> {
        self.ensure_proper()?;
        Ok(self.generators.iter().map(Monomial::degree).min().expect("nonzero ideal"))
    }

    /// Componentwise maximum exponent over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut bounds = vec![0u32; self.arity()];
        for g in &self.generators {
            for (b, &e) in bounds.iter_mut().zip(g.exponents()) {
                *b = (*b).max(e);
            }
        }
        bounds
    }

    /// Variables that occur in some minimal generator.
    pub fn support_vars(&self) -> Vec<usize> {
        self.max_exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Image under setting the variables in `vars` to 1 (equivalently, the
    /// saturation with respect to the product of those variables).
    pub fn saturate_vars(&self, vars: &[usize]) -> Self {
        let gens = self.generators.iter().map(|g| g.zeroed_at(vars)).collect();
        Self { context: self.context.clone(), generators: minimalize_vec(gens) }
    }

    /// Renders the generator list as `(x^3, x^2*y, y^3)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> =
            self.generators.iter().map(|g| self.context.render(g)).collect();
        format!("({})", parts.join(", "))
    }
}
