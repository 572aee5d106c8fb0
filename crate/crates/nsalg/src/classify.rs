//! Symmetry, pseudo-symmetry, almost symmetry and irreducibility of the
//! coefficient ring of an equi-gcd algebra, plus the flatness test.

use std::fmt;

use crate::algebra::SemigroupAlgebra;
use crate::error::{Error, Result};
use crate::exponent::{lcm, Exponent, MonomialSet};

/// The symmetry verdict, strongest first: symmetric and pseudo-symmetric
/// coefficient rings are exactly the irreducible ones, and both are almost
/// symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Symmetric,
    PseudoSymmetric,
    AlmostSymmetric,
    General,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Symmetric => "symmetric",
            Verdict::PseudoSymmetric => "pseudo-symmetric",
            Verdict::AlmostSymmetric => "almost-symmetric",
            Verdict::General => "general",
        };
        write!(f, "{s}")
    }
}

/// Classification of a coefficient ring inside its extension, with witness
/// data: the single Frobenius exponent when it exists, its half for the
/// pseudo-symmetric case, the maximal pseudo-Frobenius monomials, and the
/// complementary pairing of the non-Frobenius pseudo-Frobenius exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub single_frobenius: Option<Exponent>,
    pub half: Option<Exponent>,
    pub maximal_pf: MonomialSet,
    pub nari_pairing: Option<Vec<(Exponent, Exponent)>>,
    pub irreducible: bool,
}

/// Pseudo-Frobenius monomials u^w with u^w u^{w'} pseudo-Frobenius for no
/// pseudo-Frobenius u^{w'}.
pub fn maximal_pseudo_frobenius(alg: &SemigroupAlgebra) -> Result<MonomialSet> {
    if alg.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    let pf = alg.pseudo_frobenius_monomials()?;
    Ok(maximal_pf_of(&pf))
}

fn maximal_pf_of(pf: &MonomialSet) -> MonomialSet {
    pf.iter()
        .filter(|&w| !pf.iter().any(|w2| pf.contains(w + w2)))
        .collect()
}

/// Classifies the coefficient ring: symmetric when PF = {w}, pseudo-symmetric
/// when PF = {w, w/2}, almost symmetric when the maximal pseudo-Frobenius
/// monomial is unique; irreducible exactly in the first two cases.
pub fn classify(alg: &SemigroupAlgebra) -> Result<Classification> {
    if alg.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    let pf = alg.pseudo_frobenius_monomials()?;
    let frobenius = alg.frobenius_monomials()?;
    let maximal_pf = maximal_pf_of(&pf);

    let single_frobenius = if frobenius.len() == 1 {
        frobenius.min()
    } else {
        None
    };
    let symmetric = pf.len() == 1 && single_frobenius == pf.min();
    let pseudo_symmetric = pf.len() == 2 && {
        let lo = pf.min().unwrap();
        let hi = pf.max().unwrap();
        hi.half() == lo && single_frobenius == Some(hi)
    };
    let almost = maximal_pf.len() == 1;
    let verdict = if symmetric {
        Verdict::Symmetric
    } else if pseudo_symmetric {
        Verdict::PseudoSymmetric
    } else if almost {
        Verdict::AlmostSymmetric
    } else {
        Verdict::General
    };

    let half = pseudo_symmetric.then(|| pf.min().unwrap());
    let nari_pairing = single_frobenius.map(|w| {
        let rest: Vec<Exponent> = pf.iter().filter(|&t| t != w).collect();
        let n = rest.len();
        (0..n).map(|i| (rest[i], rest[n - 1 - i])).collect()
    });

    Ok(Classification {
        verdict,
        single_frobenius,
        half,
        maximal_pf,
        nari_pairing,
        irreducible: symmetric || pseudo_symmetric,
    })
}

/// The three equivalent statements for a single-Frobenius algebra: (a) the
/// coefficient ring is almost symmetric; (b) writing PF \ {w} as
/// t_1 < ... < t_{n-1}, each t_i + t_{n-i} equals w; (c) the gap count
/// exceeds the sporadic count by exactly n - 1.
pub fn nari_check(alg: &SemigroupAlgebra) -> Result<(bool, bool, bool)> {
    let frobenius = alg.frobenius_monomials()?;
    if frobenius.len() != 1 {
        return Err(Error::MultipleFrobenius);
    }
    let w = frobenius.min().unwrap();
    let pf = alg.pseudo_frobenius_monomials()?;
    let gaps = alg.gap_monomials()?;
    let sporadics = alg.sporadic_monomials()?;

    let almost = maximal_pf_of(&pf).len() == 1;

    let rest: Vec<Exponent> = pf.iter().filter(|&t| t != w).collect();
    let n = pf.len();
    let paired = (0..rest.len()).all(|i| rest[i] + rest[rest.len() - 1 - i] == w);

    let counted = gaps.len() == sporadics.len() + n - 1;

    Ok((almost, paired, counted))
}

/// Flatness of the algebra R''/R, via the set identity that characterizes
/// it: R must consist of exactly those members of R'' whose normalized
/// exponent is divisible by the content ratio.
pub fn is_flat(alg: &SemigroupAlgebra) -> bool {
    let coeff = alg.coeff();
    let ext = alg.ext();
    let d = lcm(coeff.step().denom(), ext.step().denom());
    let g_coeff = coeff.step().scaled(d).unwrap();
    // Both sides agree past both conductors, so a bounded sweep decides.
    let bound = coeff.conductor_exponent().max(ext.conductor_exponent());
    let scan = lcm(d, bound.denom());
    let top = bound.scaled(scan).unwrap();
    (0..=top).all(|k| {
        let e = Exponent::new(k, scan).unwrap();
        let in_cut = ext.contains(e) && e.scaled(d).is_some_and(|v| v % g_coeff == 0);
        in_cut == coeff.contains(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        let exps: Vec<Exponent> = gens.iter().map(|&g| Exponent::from_int(g)).collect();
        NumericalSemigroup::from_generators(&exps).unwrap()
    }

    fn joined(base: &[u64], extra: &[u64]) -> SemigroupAlgebra {
        let add: Vec<Exponent> = extra.iter().map(|&g| Exponent::from_int(g)).collect();
        SemigroupAlgebra::by_joining(ns(base), &add).unwrap()
    }

    fn e(n: u64) -> Exponent {
        Exponent::from_int(n)
    }

    /// The family <2n+1, ..., 4n+1> joined with 2.
    fn family(n: u64) -> SemigroupAlgebra {
        let gens: Vec<u64> = (2 * n + 1..=4 * n + 1).collect();
        joined(&gens, &[2])
    }

    #[test]
    fn symmetric_example() {
        let c = classify(&joined(&[4, 6, 9], &[5])).unwrap();
        assert_eq!(c.verdict, Verdict::Symmetric);
        assert!(c.irreducible);
        assert_eq!(c.single_frobenius, Some(e(11)));
        assert_eq!(c.maximal_pf, MonomialSet::from_ints(&[11]));
    }

    #[test]
    fn family_classification() {
        let c2 = classify(&family(2)).unwrap();
        assert_eq!(c2.verdict, Verdict::PseudoSymmetric);
        assert!(c2.irreducible);
        assert_eq!(c2.single_frobenius, Some(e(4)));
        assert_eq!(c2.half, Some(e(2)));

        let c3 = classify(&family(3)).unwrap();
        assert_eq!(c3.verdict, Verdict::AlmostSymmetric);
        assert!(!c3.irreducible);
        assert_eq!(c3.single_frobenius, Some(e(6)));
        assert_eq!(c3.maximal_pf, MonomialSet::from_ints(&[6]));

        let c1 = classify(&family(1)).unwrap();
        assert_eq!(c1.verdict, Verdict::Symmetric);
    }

    #[test]
    fn general_example() {
        // PF = {6,8,9}: three maximal pseudo-Frobenius monomials.
        let c = classify(&joined(&[5, 7, 11, 13], &[3])).unwrap();
        assert_eq!(c.verdict, Verdict::General);
        assert!(!c.irreducible);
        assert_eq!(c.maximal_pf.len(), 3);
    }

    #[test]
    fn symmetry_from_two_asymmetric_rings() {
        // Neither <3,7,8> nor <3,5,7,8> is symmetric inside the full ring,
        // yet the coefficient ring of their pairing is.
        let ambient = NumericalSemigroup::naturals();
        let lower = SemigroupAlgebra::new(ns(&[3, 7, 8]), ambient.clone()).unwrap();
        assert_ne!(classify(&lower).unwrap().verdict, Verdict::Symmetric);
        let upper = SemigroupAlgebra::new(ns(&[3, 5, 7, 8]), ambient).unwrap();
        assert_ne!(classify(&upper).unwrap().verdict, Verdict::Symmetric);

        let c = classify(&joined(&[3, 7, 8], &[5])).unwrap();
        assert_eq!(c.verdict, Verdict::Symmetric);
        assert_eq!(c.single_frobenius, Some(e(5)));
    }

    #[test]
    fn staircase_family_is_irreducible() {
        // <n+1, ..., 2n-1, 2n+1> joined with n: symmetric at n = 2, then
        // pseudo-symmetric with PF = {n, 2n}.
        for n in 2..=6u64 {
            let mut gens: Vec<u64> = (n + 1..=2 * n - 1).collect();
            gens.push(2 * n + 1);
            let alg = joined(&gens, &[n]);
            let c = classify(&alg).unwrap();
            assert!(c.irreducible, "n={n}");
            let pf = alg.pseudo_frobenius_monomials().unwrap();
            if n == 2 {
                assert_eq!(
                    alg.gap_monomials().unwrap(),
                    MonomialSet::from_ints(&[2, 4, 7]),
                    "n=2 gaps"
                );
                assert_eq!(pf, MonomialSet::from_ints(&[7]));
                assert_eq!(c.verdict, Verdict::Symmetric);
            } else {
                assert_eq!(pf, MonomialSet::from_ints(&[n, 2 * n]), "n={n}");
                assert_eq!(c.verdict, Verdict::PseudoSymmetric, "n={n}");
            }
        }
    }

    #[test]
    fn maximal_pf_examples() {
        assert_eq!(
            maximal_pseudo_frobenius(&family(2)).unwrap(),
            MonomialSet::from_ints(&[4])
        );
        assert_eq!(
            maximal_pseudo_frobenius(&joined(&[4, 6, 9], &[5])).unwrap(),
            MonomialSet::from_ints(&[11])
        );
        assert_eq!(
            maximal_pseudo_frobenius(&joined(&[5, 7, 11, 13], &[3])).unwrap(),
            MonomialSet::from_ints(&[6, 8, 9])
        );
    }

    #[test]
    fn trivial_refused() {
        let t = SemigroupAlgebra::new(ns(&[4, 6, 9]), ns(&[4, 6, 9])).unwrap();
        assert_eq!(classify(&t).unwrap_err(), Error::TrivialAlgebra);
        assert_eq!(
            maximal_pseudo_frobenius(&t).unwrap_err(),
            Error::TrivialAlgebra
        );
    }

    #[test]
    fn nari_examples() {
        assert_eq!(nari_check(&family(2)).unwrap(), (true, true, true));
        assert_eq!(
            nari_check(&joined(&[4, 6, 9], &[5])).unwrap(),
            (true, true, true)
        );
        // <5,6> inside the naturals is symmetric; all three still agree.
        let a = SemigroupAlgebra::new(ns(&[5, 6]), NumericalSemigroup::naturals()).unwrap();
        let (x, y, z) = nari_check(&a).unwrap();
        assert_eq!(x, y);
        assert_eq!(y, z);
        // Two Frobenius monomials: not applicable.
        assert_eq!(
            nari_check(&joined(&[8, 12, 19, 21], &[22])).unwrap_err(),
            Error::MultipleFrobenius
        );
    }

    #[test]
    fn flatness_examples() {
        let not_flat = SemigroupAlgebra::new(ns(&[4, 6]), ns(&[2, 3])).unwrap();
        assert!(!is_flat(&not_flat));

        let trivial = SemigroupAlgebra::new(ns(&[4, 6, 9]), ns(&[4, 6, 9])).unwrap();
        assert!(is_flat(&trivial));

        let flat = SemigroupAlgebra::new(ns(&[2]), ns(&[2, 3])).unwrap();
        assert!(is_flat(&flat));

        let noether = SemigroupAlgebra::new(ns(&[4]), ns(&[2])).unwrap();
        assert!(is_flat(&noether));
    }
}
