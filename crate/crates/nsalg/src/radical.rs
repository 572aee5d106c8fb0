//! Radicals of coefficient rings: n-th radicals inside an ambient ring,
//! numerical duplication, the flatness route to radicals, and the
//! construction of symmetric or pseudo-symmetric coefficient rings with a
//! prescribed n-th radical.

use crate::algebra::SemigroupAlgebra;
use crate::error::{Error, Result};
use crate::exponent::{lcm, Exponent, MonomialSet};
use crate::lattice;
use crate::semigroup::NumericalSemigroup;

/// The n-th radical of R inside R'': all s in R'' with n*s in R. The set is
/// already closed under addition and contains R, so it is the extension of R
/// generated by the n-th radicals of members.
pub fn nth_radical(
    coeff: &NumericalSemigroup,
    n: u64,
    ambient: &NumericalSemigroup,
) -> Result<NumericalSemigroup> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    if !coeff
        .minimal_generators()
        .iter()
        .all(|&g| ambient.contains(g))
    {
        return Err(Error::NotASubring);
    }
    let d = lcm(coeff.step().denom(), ambient.step().denom());
    let g_coeff = coeff.step().scaled(d).unwrap();
    let g_amb = ambient.step().scaled(d).unwrap();
    // Past both conductors membership is a pure congruence: divisible by the
    // ambient content and, after multiplying by n, by the coefficient
    // content.
    let l = lcm(g_amb, g_coeff / crate::exponent::gcd(g_coeff, n));
    let c_amb = ambient.conductor_exponent().scaled(d).unwrap();
    let c_coeff = coeff.conductor_exponent().scaled(d).unwrap();
    let c = c_amb.max(c_coeff.div_ceil(n));
    let c_aligned = c.div_ceil(l) * l;
    let bound = (2 * c_aligned).max(l);
    let gens: Vec<Exponent> = (1..=bound)
        .filter_map(|k| {
            let e = Exponent::new(k, d).unwrap();
            (ambient.contains(e) && coeff.contains(e.times(n))).then_some(e)
        })
        .collect();
    NumericalSemigroup::from_generators(&gens)
}

/// Numerical duplication: joins s_i + s0/2 for members s_i of R, where s0 is
/// a member whose half is not. The square of every new exponent lands back
/// in R, so the second radical of R in the result is the whole result.
pub fn numerical_duplication(
    ring: &NumericalSemigroup,
    s0: Exponent,
    doubles: &[Exponent],
) -> Result<NumericalSemigroup> {
    if !ring.contains(s0) {
        return Err(Error::NotAMember);
    }
    if ring.contains(s0.half()) {
        return Err(Error::HalfAlreadyPresent);
    }
    if doubles.iter().any(|&s| !ring.contains(s)) {
        return Err(Error::NotAMember);
    }
    let half = s0.half();
    let extra: Vec<Exponent> = doubles.iter().map(|&s| s + half).collect();
    ring.join(&extra)
}

/// Whether the coefficient ring is to come out symmetric or pseudo-symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    Symmetric,
    PseudoSymmetric,
}

/// The staged construction of a coefficient ring R with prescribed n-th
/// radical: R0 joins n times the radicand with a long run above h, R1 adds
/// h - n*w_i over the gaps w_i of the radicand, R2 adds the gaps of the
/// radicand over R1 that do not divide u^h in the ambient ring, and the
/// result completes R2 to an irreducible ring with Frobenius monomial u^h.
#[derive(Clone, Debug)]
pub struct CoverTrace {
    pub n: u64,
    pub h: Exponent,
    /// Frobenius exponent of the radicand's gcd-1 normalization.
    pub w: Exponent,
    pub r0: NumericalSemigroup,
    pub r1: NumericalSemigroup,
    pub r2: NumericalSemigroup,
    pub result: NumericalSemigroup,
    pub joined_pf: MonomialSet,
    pub mode: CoverMode,
}

/// Builds a symmetric (n >= 2) or pseudo-symmetric (n >= 3) coefficient ring
/// R of the ambient ring alg.ext() whose n-th radical is exactly the
/// radicand alg.coeff(). When h is omitted the smallest admissible value is
/// used: h > 2nw, n does not divide h, h odd for the symmetric mode, and
/// h even with h = 2 (mod n) and u^{h/2} in the ambient ring for the
/// pseudo-symmetric mode.
pub fn construct_radical_cover(
    alg: &SemigroupAlgebra,
    n: u64,
    mode: CoverMode,
    h: Option<Exponent>,
) -> Result<CoverTrace> {
    if !alg.is_equi_gcd() {
        return Err(Error::NotEquiGcd);
    }
    if n < 2 {
        return Err(Error::BadH("n must be at least 2".into()));
    }
    if mode == CoverMode::PseudoSymmetric && n < 3 {
        return Err(Error::BadH("pseudo-symmetric mode needs n >= 3".into()));
    }

    // Work in the gcd-1 normalization of the ambient ring; equi-gcd makes it
    // simultaneously the normalization of the radicand.
    let step = alg.ext().step();
    let to_red = |e: Exponent| e.ratio_int(step).or((e.is_zero()).then_some(0));
    let radicand_red = reduce(alg.coeff(), step);
    let ambient_red = reduce(alg.ext(), step);

    let w_red = match radicand_red.frobenius() {
        Some(f) if f >= Exponent::from_int(1) => f.numer(),
        _ => {
            return Err(Error::BadH(
                "the radicand normalizes to the full grid; no admissible h exists".into(),
            ))
        }
    };

    let h_red = match h {
        Some(h_exp) => {
            let hr = to_red(h_exp).ok_or_else(|| {
                Error::BadH("h must be an integer in the normalized coordinates".into())
            })?;
            validate_h(hr, n, w_red, mode, &ambient_red)?;
            hr
        }
        None => (2 * n * w_red + 1..)
            .find(|&cand| validate_h(cand, n, w_red, mode, &ambient_red).is_ok())
            .unwrap(),
    };

    // R0: n times the radicand plus the full run h+1 ..= 2h+1.
    let mut gens0: Vec<Exponent> = radicand_red
        .minimal_generators()
        .iter()
        .map(|g| g.times(n))
        .collect();
    gens0.extend((h_red + 1..=2 * h_red + 1).map(Exponent::from_int));
    let r0 = NumericalSemigroup::from_generators(&gens0)?;

    // R1: join h - n*w_i over the gaps of the radicand in the full grid.
    let radicand_gaps = radicand_red.gaps_to_full();
    let joins1: Vec<Exponent> = radicand_gaps
        .iter()
        .map(|wi| Exponent::from_int(h_red - n * wi.numer()))
        .collect();
    let r1 = r0.join(&joins1)?;

    // R2: join the gaps of the radicand over R1 that do not divide u^h in
    // the ambient ring.
    let h_exp_red = Exponent::from_int(h_red);
    let gaps_over_r1 = SemigroupAlgebra::new(r1.clone(), radicand_red.clone())?.gap_monomials()?;
    let joins2: Vec<Exponent> = gaps_over_r1
        .iter()
        .filter(|&t| match h_exp_red.checked_sub(t) {
            None => true,
            Some(diff) => !ambient_red.contains(diff),
        })
        .collect();
    let r2 = r1.join(&joins2)?;

    let cover_alg = SemigroupAlgebra::new(r2.clone(), ambient_red.clone())?;
    let (result, joined_pf) = lattice::irreducible_cover_trace(&cover_alg, h_exp_red)?;

    Ok(CoverTrace {
        n,
        h: step.times(h_red),
        w: step.times(w_red),
        r0: rescale(&r0, step),
        r1: rescale(&r1, step),
        r2: rescale(&r2, step),
        result: rescale(&result, step),
        joined_pf: joined_pf.iter().map(|e| step.times(e.numer())).collect(),
        mode,
    })
}

fn validate_h(
    h: u64,
    n: u64,
    w: u64,
    mode: CoverMode,
    ambient_red: &NumericalSemigroup,
) -> Result<()> {
    if h <= 2 * n * w {
        return Err(Error::BadH(format!("h must exceed 2nw = {}", 2 * n * w)));
    }
    if h.is_multiple_of(n) {
        return Err(Error::BadH(format!("n = {n} must not divide h = {h}")));
    }
    match mode {
        CoverMode::Symmetric => {
            if h.is_multiple_of(2) {
                return Err(Error::BadH("symmetric mode needs an odd h".into()));
            }
        }
        CoverMode::PseudoSymmetric => {
            if h % n != 2 % n {
                return Err(Error::BadH(
                    "pseudo-symmetric mode needs h = 2 (mod n)".into(),
                ));
            }
            if !h.is_multiple_of(2) || !ambient_red.contains(Exponent::from_int(h / 2)) {
                return Err(Error::BadH(
                    "pseudo-symmetric mode needs u^{h/2} inside the ambient ring".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Maps a semigroup to the gcd-1 normalized coordinates given by `step`.
fn reduce(ns: &NumericalSemigroup, step: Exponent) -> NumericalSemigroup {
    let gens: Vec<Exponent> = ns
        .minimal_generators()
        .iter()
        .map(|g| Exponent::from_int(g.ratio_int(step).expect("generator lies on the step grid")))
        .collect();
    NumericalSemigroup::from_generators(&gens).unwrap()
}

/// Maps a semigroup in normalized coordinates back by multiplying with
/// `step`.
fn rescale(ns: &NumericalSemigroup, step: Exponent) -> NumericalSemigroup {
    let gens: Vec<Exponent> = ns
        .minimal_generators()
        .iter()
        .map(|g| step.times(g.numer()))
        .collect();
    NumericalSemigroup::from_generators(&gens).unwrap()
}

/// When R''/R and R''/R' are both flat for a chain R ⊆ R' ⊆ R'', R' is the
/// q-th radical of R for q the ratio of the normalized contents; returns
/// that q, or None when either algebra fails flatness.
pub fn flat_radical_check(
    coeff: &NumericalSemigroup,
    mid: &NumericalSemigroup,
    ambient: &NumericalSemigroup,
) -> Result<Option<u64>> {
    SemigroupAlgebra::new(coeff.clone(), mid.clone())?;
    let outer = SemigroupAlgebra::new(coeff.clone(), ambient.clone())?;
    let upper = SemigroupAlgebra::new(mid.clone(), ambient.clone())?;
    if !crate::classify::is_flat(&outer) || !crate::classify::is_flat(&upper) {
        return Ok(None);
    }
    let q = coeff
        .step()
        .ratio_int(mid.step())
        .expect("the content of R is a multiple of the content of R'");
    debug_assert_eq!(&nth_radical(coeff, q, ambient)?, mid);
    Ok(Some(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        let exps: Vec<Exponent> = gens.iter().map(|&g| Exponent::from_int(g)).collect();
        NumericalSemigroup::from_generators(&exps).unwrap()
    }

    fn e(n: u64) -> Exponent {
        Exponent::from_int(n)
    }

    fn er(num: u64, den: u64) -> Exponent {
        Exponent::new(num, den).unwrap()
    }

    #[test]
    fn radical_of_duplication_like_ring() {
        // sqrt[2] of <6,10,14,15> inside <3,4,5> is <3,5,7>.
        let r = ns(&[6, 10, 14, 15]);
        let amb = ns(&[3, 4, 5]);
        assert_eq!(nth_radical(&r, 2, &amb).unwrap(), ns(&[3, 5, 7]));
    }

    #[test]
    fn radical_examples_5_6() {
        let r = ns(&[5, 6]);
        let amb = r.join(&[e(7), e(8)]).unwrap();
        assert_eq!(nth_radical(&r, 2, &amb).unwrap(), r.join(&[e(8)]).unwrap());
        for n in 3..=6 {
            assert_eq!(nth_radical(&r, n, &amb).unwrap(), amb);
        }
        assert_eq!(nth_radical(&r, 1, &amb).unwrap(), r);
    }

    #[test]
    fn radical_requires_subring() {
        assert_eq!(
            nth_radical(&ns(&[2, 3]), 2, &ns(&[4, 6, 9])).unwrap_err(),
            Error::NotASubring
        );
    }

    #[test]
    fn duplication_examples() {
        let r = ns(&[4, 6, 9]);
        let dup = numerical_duplication(&r, e(4), &[e(9)]).unwrap();
        assert_eq!(dup, r.join(&[e(11)]).unwrap());
        assert_eq!(nth_radical(&r, 2, &dup).unwrap(), dup);

        assert_eq!(numerical_duplication(&r, e(4), &[]).unwrap(), r);

        // Rational-scale duplication: <3,5> with s0 = 3 joins u^{9/2}.
        let r35 = ns(&[3, 5]);
        let dup2 = numerical_duplication(&r35, e(3), &[e(3)]).unwrap();
        assert!(dup2.contains(er(9, 2)));
        assert_eq!(nth_radical(&r35, 2, &dup2).unwrap(), dup2);

        assert_eq!(
            numerical_duplication(&ns(&[2, 3]), e(4), &[e(2)]).unwrap_err(),
            Error::HalfAlreadyPresent
        );
        assert_eq!(
            numerical_duplication(&r, e(5), &[e(4)]).unwrap_err(),
            Error::NotAMember
        );
    }

    #[test]
    fn cover_trace_n2_h21() {
        let alg = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[4, 5, 6, 7])).unwrap();
        let trace = construct_radical_cover(&alg, 2, CoverMode::Symmetric, Some(e(21))).unwrap();
        assert_eq!(trace.w, e(5));
        assert_eq!(trace.r0, ns(&[8, 12, 14, 18, 23, 25, 27, 29]));
        assert_eq!(trace.r1, ns(&[8, 11, 12, 14, 15, 17, 18]));
        assert_eq!(trace.r2, trace.r1);
        assert_eq!(trace.result, trace.r2);
        assert_eq!(
            nth_radical(&trace.result, 2, alg.ext()).unwrap(),
            *alg.coeff()
        );
        let out = SemigroupAlgebra::new(trace.result.clone(), alg.ext().clone()).unwrap();
        let c = crate::classify::classify(&out).unwrap();
        assert_eq!(c.verdict, crate::classify::Verdict::Symmetric);
        assert_eq!(c.single_frobenius, Some(e(21)));
    }

    #[test]
    fn cover_trace_n3_h31() {
        let alg = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[4, 5, 6, 7])).unwrap();
        let trace = construct_radical_cover(&alg, 3, CoverMode::Symmetric, Some(e(31))).unwrap();
        assert_eq!(
            trace.r0,
            ns(&[12, 18, 21, 27, 32, 34, 35, 37, 38, 40, 41, 43])
        );
        assert_eq!(trace.r1, ns(&[12, 16, 18, 21, 22, 25, 27, 35]));
        assert_eq!(trace.r2, ns(&[12, 16, 18, 21, 22, 25, 27, 29, 35]));
        let pf = SemigroupAlgebra::new(trace.r2.clone(), alg.ext().clone())
            .unwrap()
            .pseudo_frobenius_monomials()
            .unwrap();
        assert_eq!(pf, MonomialSet::from_ints(&[17, 20, 23, 26, 31]));
        assert_eq!(trace.joined_pf, MonomialSet::from_ints(&[17, 20, 23, 26]));
        assert_eq!(
            trace.result,
            trace.r2.join(&[e(17), e(20), e(23), e(26)]).unwrap()
        );
        assert_eq!(
            nth_radical(&trace.result, 3, alg.ext()).unwrap(),
            *alg.coeff()
        );
        let out = SemigroupAlgebra::new(trace.result.clone(), alg.ext().clone()).unwrap();
        assert_eq!(
            crate::classify::classify(&out).unwrap().verdict,
            crate::classify::Verdict::Symmetric
        );
    }

    #[test]
    fn cover_gap_identity_r1_over_r0() {
        let alg = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[4, 5, 6, 7])).unwrap();
        let trace = construct_radical_cover(&alg, 2, CoverMode::Symmetric, Some(e(21))).unwrap();
        let diff = SemigroupAlgebra::new(trace.r0.clone(), trace.r1.clone())
            .unwrap()
            .gap_monomials()
            .unwrap();
        assert_eq!(diff, MonomialSet::from_ints(&[11, 15, 17, 19]));
    }

    #[test]
    fn cover_default_h_postconditions() {
        let alg = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[4, 5, 6, 7])).unwrap();
        for n in 2..=4 {
            let trace = construct_radical_cover(&alg, n, CoverMode::Symmetric, None).unwrap();
            assert_eq!(
                nth_radical(&trace.result, n, alg.ext()).unwrap(),
                *alg.coeff()
            );
            let out = SemigroupAlgebra::new(trace.result.clone(), alg.ext().clone()).unwrap();
            let c = crate::classify::classify(&out).unwrap();
            assert_eq!(c.verdict, crate::classify::Verdict::Symmetric, "n={n}");
            assert_eq!(c.single_frobenius, Some(trace.h));
        }
        for n in 3..=4 {
            let trace = construct_radical_cover(&alg, n, CoverMode::PseudoSymmetric, None).unwrap();
            assert_eq!(
                nth_radical(&trace.result, n, alg.ext()).unwrap(),
                *alg.coeff()
            );
            let out = SemigroupAlgebra::new(trace.result.clone(), alg.ext().clone()).unwrap();
            let c = crate::classify::classify(&out).unwrap();
            assert_eq!(
                c.verdict,
                crate::classify::Verdict::PseudoSymmetric,
                "n={n}"
            );
            assert_eq!(c.single_frobenius, Some(trace.h));
            assert_eq!(c.half, Some(trace.h.half()));
        }
    }

    #[test]
    fn cover_rejects_bad_h() {
        let alg = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[4, 5, 6, 7])).unwrap();
        assert!(matches!(
            construct_radical_cover(&alg, 2, CoverMode::Symmetric, Some(e(19))),
            Err(Error::BadH(_))
        ));
        assert!(matches!(
            construct_radical_cover(&alg, 2, CoverMode::Symmetric, Some(e(22))),
            Err(Error::BadH(_))
        ));
        assert!(matches!(
            construct_radical_cover(&alg, 2, CoverMode::PseudoSymmetric, Some(e(21))),
            Err(Error::BadH(_))
        ));
        let natural = SemigroupAlgebra::new(
            NumericalSemigroup::naturals(),
            NumericalSemigroup::naturals(),
        )
        .unwrap();
        assert!(matches!(
            construct_radical_cover(&natural, 2, CoverMode::Symmetric, None),
            Err(Error::BadH(_))
        ));
    }

    #[test]
    fn distinct_h_give_distinct_covers() {
        let alg = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[4, 5, 6, 7])).unwrap();
        let mut results = Vec::new();
        for h in [21u64, 23, 25, 27] {
            let trace = construct_radical_cover(&alg, 2, CoverMode::Symmetric, Some(e(h))).unwrap();
            assert_eq!(
                nth_radical(&trace.result, 2, alg.ext()).unwrap(),
                *alg.coeff()
            );
            assert!(!results.contains(&trace.result), "h={h} repeats a cover");
            results.push(trace.result);
        }
    }

    #[test]
    fn flat_radical_chain() {
        assert_eq!(
            flat_radical_check(&ns(&[4]), &ns(&[2]), &ns(&[2, 3])).unwrap(),
            Some(2)
        );
        let s = ns(&[4, 6, 9]);
        assert_eq!(flat_radical_check(&s, &s, &s).unwrap(), Some(1));
        assert_eq!(
            flat_radical_check(&ns(&[4, 6]), &ns(&[2, 3]), &ns(&[2, 3])).unwrap(),
            None
        );
    }

    #[test]
    fn radical_monotonicity() {
        let r = ns(&[5, 6]);
        let amb = r.join(&[e(7), e(8)]).unwrap();
        for n in 2..=5u64 {
            let rad = nth_radical(&r, n, &amb).unwrap();
            for &g in r.minimal_generators() {
                assert!(rad.contains(g));
            }
            for m in 2..=3u64 {
                let nested = nth_radical(&nth_radical(&r, n, &amb).unwrap(), m, &amb).unwrap();
                let direct = nth_radical(&r, n * m, &amb).unwrap();
                for k in 0..=60 {
                    let t = e(k);
                    if direct.contains(t) {
                        assert!(nested.contains(t), "n={n} m={m} t={k}");
                    }
                }
            }
        }
    }
}
