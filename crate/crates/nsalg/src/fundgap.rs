//! Fundamental gap monomials: gaps whose doubles and triples land back in
//! the coefficient ring, singleton detection with radical-chain witnesses,
//! enumeration of the coefficient rings of an ambient ring with a single
//! fundamental gap monomial, and the radical-intersection characterization
//! of extensions.

use crate::algebra::SemigroupAlgebra;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, MonomialSet};
use crate::par;
use crate::radical::nth_radical;
use crate::semigroup::NumericalSemigroup;

/// The fundamental gap monomials FG = G ∩ √²R ∩ √³R together with, for each
/// non-fundamental gap t, a witness n in {2, 3} with n*t still a gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalGapReport {
    pub fg: MonomialSet,
    pub singleton: bool,
    /// For every gap outside fg: the multiplier certifying it misses the
    /// corresponding radical.
    pub witnesses: Vec<(Exponent, u64)>,
}

/// Computes the fundamental gap monomials of a nontrivial equi-gcd algebra.
/// A gap g is fundamental exactly when both 2g and 3g lie in R; the largest
/// gap always qualifies.
pub fn fundamental_gap_monomials(alg: &SemigroupAlgebra) -> Result<FundamentalGapReport> {
    if alg.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    let gaps = alg.gap_monomials()?;
    let coeff = alg.coeff();
    let fg: MonomialSet = gaps
        .iter()
        .filter(|&g| coeff.contains(g.times(2)) && coeff.contains(g.times(3)))
        .collect();
    let witnesses = gaps
        .iter()
        .filter(|g| !fg.contains(*g))
        .map(|g| {
            let n = if !coeff.contains(g.times(2)) { 2 } else { 3 };
            (g, n)
        })
        .collect();
    Ok(FundamentalGapReport {
        singleton: fg.len() == 1,
        fg,
        witnesses,
    })
}

/// Witness that a gap t reaches the unique fundamental gap monomial: the
/// exact multiplier n with n*t = s and the chain of intermediate gaps.
pub type RadicalChain = (Exponent, u64, Vec<Exponent>);

/// When FG is the singleton {s}: one [`RadicalChain`] per other gap.
/// Returns None when FG is not a singleton.
pub fn single_fg_witness(alg: &SemigroupAlgebra) -> Result<Option<Vec<RadicalChain>>> {
    let report = fundamental_gap_monomials(alg)?;
    if !report.singleton {
        return Ok(None);
    }
    let s = report.fg.min().unwrap();
    let gaps = alg.gap_monomials()?;
    let mut out = Vec::new();
    for t in gaps.iter().filter(|&t| t != s) {
        let n = s
            .ratio_int(t)
            .expect("every gap is a radical of the unique fundamental gap monomial");
        let mut chain = vec![t];
        let mut cur = t;
        while cur != s {
            let k = (2..)
                .find(|&k| gaps.contains(cur.times(k)))
                .expect("multiplying a non-fundamental gap stays in the gap set until s");
            cur = cur.times(k);
            chain.push(cur);
        }
        out.push((t, n, chain));
    }
    Ok(Some(out))
}

/// All nontrivial equi-gcd coefficient rings of `ambient` whose algebra has
/// exactly one fundamental gap monomial. The candidate exponent w of the
/// single fundamental gap is bounded by twice the least n > 4 past which the
/// normalized ambient ring contains every integer; for each w the gap set
/// must consist of divisors of w, so candidates are subsets of the divisor
/// list, validated by recomputing the fundamental gaps.
pub fn enumerate_single_fg_coeff_rings(
    ambient: &NumericalSemigroup,
    bound: Option<u64>,
) -> Vec<NumericalSemigroup> {
    let step = ambient.step();
    let conductor_red = ambient.conductor_exponent().ratio_int(step).unwrap_or(0);
    let w_max = bound.unwrap_or_else(|| 2 * conductor_red.max(5));

    let member_red = |t: u64| ambient.contains(step.times(t));

    let per_w = |w: u64| -> Vec<NumericalSemigroup> {
        let mut found = Vec::new();
        if !member_red(w) {
            return found;
        }
        let divisors: Vec<u64> = (1..=w)
            .filter(|&d| w.is_multiple_of(d) && member_red(d))
            .collect();
        let w_pos = divisors.iter().position(|&d| d == w).unwrap();
        let m = divisors.len();
        for mask in 0..(1u32 << m) {
            if mask & (1 << w_pos) == 0 {
                continue;
            }
            let gap_set: Vec<u64> = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| divisors[i])
                .collect();
            if let Some(ring) = ring_from_gaps(ambient, step, conductor_red, w, &gap_set) {
                found.push(ring);
            }
        }
        found
    };

    let mut rings: Vec<NumericalSemigroup> = par::map_collect((1..=w_max).collect(), per_w)
        .into_iter()
        .flatten()
        .collect();
    rings.sort_by(|a, b| a.minimal_generators().cmp(b.minimal_generators()));
    rings.dedup();
    rings
}

/// Builds the coefficient ring with member set ambient \ gap_set and checks
/// it is additively closed with fundamental gap set exactly {w}.
fn ring_from_gaps(
    ambient: &NumericalSemigroup,
    step: Exponent,
    conductor_red: u64,
    w: u64,
    gap_set: &[u64],
) -> Option<NumericalSemigroup> {
    let in_gaps = |t: u64| gap_set.contains(&t);
    let member_red = |t: u64| ambient.contains(step.times(t));
    // Closure: no gap may split as a sum of two remaining members.
    for &t in gap_set {
        for a in 1..=t / 2 {
            let b = t - a;
            if member_red(a) && !in_gaps(a) && member_red(b) && !in_gaps(b) {
                return None;
            }
        }
    }
    let top = 2 * (conductor_red + w + 1);
    let gens: Vec<Exponent> = (1..=top)
        .filter(|&t| member_red(t) && !in_gaps(t))
        .map(|t| step.times(t))
        .collect();
    let ring = NumericalSemigroup::from_generators(&gens).ok()?;
    let alg = SemigroupAlgebra::new(ring.clone(), ambient.clone()).ok()?;
    let expected: MonomialSet = gap_set.iter().map(|&t| step.times(t)).collect();
    if alg.gap_monomials().ok()? != expected {
        return None;
    }
    let report = fundamental_gap_monomials(&alg).ok()?;
    let w_exp = step.times(w);
    (report.singleton && report.fg.min() == Some(w_exp)).then_some(ring)
}

/// All extensions of R in R' are intersections of radicals exactly when the
/// fundamental gap set is a singleton.
pub fn extensions_are_radical_intersections(alg: &SemigroupAlgebra) -> Result<bool> {
    Ok(fundamental_gap_monomials(alg)?.singleton)
}

/// Tries to write the extension T as an intersection of radicals of R inside
/// R': collects every radical index whose radical contains T, then checks the
/// intersection comes back to T exactly and trims the index list to one
/// witness per excluded gap. Returns None when T is not such an intersection.
pub fn express_as_radical_intersection(
    alg: &SemigroupAlgebra,
    extension: &NumericalSemigroup,
) -> Result<Option<Vec<u64>>> {
    let gaps = alg.gap_monomials()?;
    if !alg
        .coeff()
        .minimal_generators()
        .iter()
        .all(|&g| extension.contains(g))
        || !extension
            .minimal_generators()
            .iter()
            .all(|&g| alg.ext().contains(g))
    {
        return Err(Error::NotASubring);
    }
    let absorbed: MonomialSet = gaps.iter().filter(|&g| extension.contains(g)).collect();
    let excluded: Vec<Exponent> = gaps.iter().filter(|&g| !extension.contains(g)).collect();
    if excluded.is_empty() {
        // The empty intersection is the whole extension ring.
        return Ok(Some(Vec::new()));
    }
    let Some(max_gap) = gaps.max() else {
        return Ok(Some(Vec::new()));
    };
    let min_gap = gaps.min().unwrap();
    let d_max = max_gap.ratio_floor(min_gap);

    // Radical indices whose radical contains T: every absorbed gap must
    // multiply into R.
    let usable: Vec<u64> = (1..=d_max)
        .filter(|&d| absorbed.iter().all(|g| alg.coeff().contains(g.times(d))))
        .collect();
    let excludes = |d: u64, g: Exponent| !alg.coeff().contains(g.times(d));
    if !excluded
        .iter()
        .all(|&g| usable.iter().any(|&d| excludes(d, g)))
    {
        return Ok(None);
    }
    // Fewest radical indices that together exclude every excluded gap;
    // subset sizes are tiny, so search them in lexicographic order.
    let covered = |picked: &[u64]| {
        excluded
            .iter()
            .all(|&g| picked.iter().any(|&d| excludes(d, g)))
    };
    let mut picked: Vec<u64> = usable.clone();
    'sizes: for size in 1..usable.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let cand: Vec<u64> = idx.iter().map(|&i| usable[i]).collect();
            if covered(&cand) {
                picked = cand;
                break 'sizes;
            }
            let mut k = size;
            while k > 0 && idx[k - 1] == usable.len() - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for j in k..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    // The intersection of the picked radicals must give back T exactly.
    let mut inter = alg.ext().clone();
    for &d in &picked {
        inter = inter.intersect(&nth_radical(alg.coeff(), d, alg.ext())?);
    }
    Ok((&inter == extension).then_some(picked))
}
