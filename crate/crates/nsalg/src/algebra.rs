//! Relative invariants of a numerical semigroup algebra R'/R: the equi-gcd
//! test, conductor ideal, gap and sporadic monomials, the divisibility
//! orders, Frobenius and pseudo-Frobenius monomials, and Apéry monomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{lcm, Exponent, MonomialSet};
use crate::semigroup::NumericalSemigroup;

/// Which of the two divisibility orders to use: u^s divides u^t over the
/// coefficient ring when t - s lies in R, over the extension when it lies
/// in R'.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Coeff,
    Ext,
}

/// An ordered pair of numerical semigroups R ⊆ R' sharing one variable:
/// the extension R' regarded as an algebra over the coefficient ring R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupAlgebra {
    coeff: NumericalSemigroup,
    ext: NumericalSemigroup,
    shared_scale: u64,
    equi_gcd: bool,
}

impl SemigroupAlgebra {
    /// Pairs a coefficient ring with an extension, verifying R ⊆ R' and
    /// computing the equi-gcd flag.
    pub fn new(coeff: NumericalSemigroup, ext: NumericalSemigroup) -> Result<Self> {
        if !coeff.minimal_generators().iter().all(|&g| ext.contains(g)) {
            return Err(Error::NotASubring);
        }
        let shared_scale = lcm(coeff.step().denom(), ext.step().denom());
        let equi_gcd = coeff.step() == ext.step();
        Ok(SemigroupAlgebra {
            coeff,
            ext,
            shared_scale,
            equi_gcd,
        })
    }

    /// Builds the algebra R[u^e1, ...]/R by joining gap exponents to R.
    pub fn by_joining(coeff: NumericalSemigroup, joined: &[Exponent]) -> Result<Self> {
        let ext = coeff.join(joined)?;
        Self::new(coeff, ext)
    }

    pub fn coeff(&self) -> &NumericalSemigroup {
        &self.coeff
    }

    pub fn ext(&self) -> &NumericalSemigroup {
        &self.ext
    }

    /// Whether clearing denominators gives log R and log R' the same gcd;
    /// equivalent to a nonzero conductor and to finite gap and sporadic sets.
    pub fn is_equi_gcd(&self) -> bool {
        self.equi_gcd
    }

    pub fn is_trivial(&self) -> bool {
        self.coeff == self.ext
    }

    fn require_equi_gcd(&self) -> Result<()> {
        if self.equi_gcd {
            Ok(())
        } else {
            Err(Error::InfiniteSet)
        }
    }

    /// Walks the shared grid up to `bound` inclusive.
    fn grid_upto(&self, bound: Exponent) -> impl Iterator<Item = Exponent> + '_ {
        let d = lcm(self.shared_scale, bound.denom());
        let n = bound.scaled(d).unwrap();
        (0..=n).filter_map(move |k| {
            let e = Exponent::new(k, d).unwrap();
            (self.ext.contains(e) || self.coeff.contains(e)).then_some(e)
        })
    }

    /// u^s divides u^t in the chosen order.
    pub fn divides(&self, s: Exponent, t: Exponent, order: Order) -> bool {
        match t.checked_sub(s) {
            None => false,
            Some(diff) => match order {
                Order::Coeff => self.coeff.contains(diff),
                Order::Ext => self.ext.contains(diff),
            },
        }
    }

    /// Exponents in R' but not in R; finite exactly when the algebra is
    /// equi-gcd.
    pub fn gap_monomials(&self) -> Result<MonomialSet> {
        self.require_equi_gcd()?;
        let bound = self.coeff.conductor_exponent();
        Ok(self
            .grid_upto(bound)
            .filter(|&e| self.ext.contains(e) && !self.coeff.contains(e))
            .collect())
    }

    /// Exponents in R outside the conductor ideal; finite exactly when the
    /// algebra is equi-gcd.
    pub fn sporadic_monomials(&self) -> Result<MonomialSet> {
        self.require_equi_gcd()?;
        let bound = self.coeff.conductor_exponent();
        let ext_small = self.ext.members_upto(bound);
        Ok(self
            .grid_upto(bound)
            .filter(|&e| self.coeff.contains(e) && !self.in_conductor_with(&ext_small, e))
            .collect())
    }

    /// Conductor membership: s ∈ R and s + t ∈ R for every t ∈ R'. Testing
    /// t up to the conductor exponent of R is enough: beyond it the sum is a
    /// grid point past the conductor.
    fn in_conductor_with(&self, ext_small: &[Exponent], s: Exponent) -> bool {
        self.coeff.contains(s) && ext_small.iter().all(|&t| self.coeff.contains(s + t))
    }

    /// The conductor ideal of R'/R with its minimal monomial generators
    /// over R'.
    pub fn conductor(&self) -> Result<ConductorIdeal> {
        if !self.equi_gcd {
            return Err(Error::ZeroConductor);
        }
        let sporadics = self.sporadic_monomials()?;
        let threshold = self.coeff.conductor_exponent();
        // Minimal generators over R' all lie below threshold + multiplicity
        // of R': anything larger reduces by the smallest nonzero extension
        // member.
        let bound = threshold + self.ext.multiplicity();
        let ext_small = self.ext.members_upto(bound);
        let elements: Vec<Exponent> = self
            .grid_upto(bound)
            .filter(|&e| self.in_conductor_with(&ext_small, e))
            .collect();
        let min_generators = elements
            .iter()
            .copied()
            .filter(|&s| {
                !elements.iter().any(|&t| {
                    t < s
                        && matches!(s.checked_sub(t), Some(d) if !d.is_zero() && self.ext.contains(d))
                })
            })
            .collect();
        Ok(ConductorIdeal {
            sporadics,
            threshold,
            min_generators,
            coeff: self.coeff.clone(),
        })
    }

    fn maxima(&self, set: &MonomialSet, order: Order) -> MonomialSet {
        set.iter()
            .filter(|&e| !set.iter().any(|f| f != e && self.divides(e, f, order)))
            .collect()
    }

    /// Gap monomials maximal in the extension order; always contained in the
    /// pseudo-Frobenius set.
    pub fn frobenius_monomials(&self) -> Result<MonomialSet> {
        let gaps = self.gap_monomials()?;
        Ok(self.maxima(&gaps, Order::Ext))
    }

    /// Gap monomials maximal in the coefficient order.
    pub fn pseudo_frobenius_monomials(&self) -> Result<MonomialSet> {
        let gaps = self.gap_monomials()?;
        Ok(self.maxima(&gaps, Order::Coeff))
    }

    /// Aggregates gaps, sporadics, conductor and the two Frobenius-type sets.
    pub fn invariant_report(&self) -> Result<InvariantReport> {
        let gaps = self.gap_monomials()?;
        let conductor = self.conductor()?;
        let sporadics = conductor.sporadics().clone();
        let frobenius = self.maxima(&gaps, Order::Ext);
        let pseudo_frobenius = self.maxima(&gaps, Order::Coeff);
        let cm_type = pseudo_frobenius.len();
        let f_type = frobenius.len();
        Ok(InvariantReport {
            gaps,
            sporadics,
            conductor,
            frobenius,
            pseudo_frobenius,
            cm_type,
            f_type,
        })
    }

    /// Apéry monomials of R'/R: members of R' minimal in the coefficient
    /// order. Always finite since R has a nonzero member.
    pub fn apery_monomials(&self) -> Result<MonomialSet> {
        let bound = self.ext.conductor_exponent() + self.coeff.multiplicity();
        let coeff_small: Vec<Exponent> = self
            .coeff
            .members_upto(bound)
            .into_iter()
            .filter(|r| !r.is_zero())
            .collect();
        Ok(self
            .ext
            .members_upto(bound)
            .into_iter()
            .filter(|&m| {
                !coeff_small
                    .iter()
                    .any(|&r| matches!(m.checked_sub(r), Some(d) if self.ext.contains(d)))
            })
            .collect())
    }

    /// Apéry monomials maximal in the extension order.
    pub fn maximal_apery_monomials(&self) -> Result<MonomialSet> {
        let apery = self.apery_monomials()?;
        Ok(self.maxima(&apery, Order::Ext))
    }

    /// Reads the pseudo-Frobenius monomials off the two Apéry sets with
    /// respect to a nonzero member s of R: shift the coefficient-order maxima
    /// of Apr(R/u^s) \ Apr(R'/u^s) down by s.
    pub fn pf_via_apery(&self, s: Exponent) -> Result<MonomialSet> {
        self.require_equi_gcd()?;
        if s.is_zero() {
            return Err(Error::ZeroExponent);
        }
        if !self.coeff.contains(s) {
            return Err(Error::NotAMember);
        }
        let a_coeff = self.coeff.apery_set(s)?;
        let a_ext = self.ext.apery_set(s)?;
        let diff = a_coeff.difference(&a_ext);
        let maxima = self.maxima(&diff, Order::Coeff);
        Ok(maxima
            .iter()
            .map(|t| t.checked_sub(s).expect("Apéry elements dominate s"))
            .collect())
    }
}

impl fmt::Display for SemigroupAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ext, self.coeff)
    }
}

/// The conductor ideal {s ∈ R : s + R' ⊆ R}, stored as its finite
/// complement in R (the sporadic exponents) plus the threshold past which
/// every member of R belongs to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorIdeal {
    sporadics: MonomialSet,
    threshold: Exponent,
    min_generators: MonomialSet,
    coeff: NumericalSemigroup,
}

impl ConductorIdeal {
    pub fn contains(&self, e: Exponent) -> bool {
        self.coeff.contains(e) && !self.sporadics.contains(e)
    }

    /// The sporadic exponents: members of R outside the ideal.
    pub fn sporadics(&self) -> &MonomialSet {
        &self.sporadics
    }

    /// Every member of R at or above this exponent lies in the ideal.
    pub fn threshold(&self) -> Exponent {
        self.threshold
    }

    /// Minimal monomial generators of the ideal over the extension.
    pub fn min_generators(&self) -> &MonomialSet {
        &self.min_generators
    }
}

/// All relative invariants of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub gaps: MonomialSet,
    pub sporadics: MonomialSet,
    pub conductor: ConductorIdeal,
    pub frobenius: MonomialSet,
    pub pseudo_frobenius: MonomialSet,
    pub cm_type: usize,
    pub f_type: usize,
}
