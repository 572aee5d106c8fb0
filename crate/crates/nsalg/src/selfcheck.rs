//! Randomized cross-validation harness: generates equi-gcd algebras and
//! compares every fast path against the brute-force oracle. Used by the
//! `selfcheck` CLI subcommand and the acceptance suite.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::SemigroupAlgebra;
use crate::classify;
use crate::exponent::{Exponent, MonomialSet};
use crate::lattice;
use crate::oracle;
use crate::par;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug)]
pub struct SelfCheckConfig {
    pub seed: u64,
    pub count: usize,
    pub max_gen: u64,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig {
            seed: 1,
            count: 200,
            max_gen: 30,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SelfCheckReport {
    pub instances: usize,
    pub checks: usize,
    pub discrepancies: Vec<String>,
}

impl SelfCheckReport {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for SelfCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "checked {} instances ({} comparisons): {} discrepancies",
            self.instances,
            self.checks,
            self.discrepancies.len()
        )
    }
}

/// A random coefficient ring with 2 to 5 generators bounded by `max_gen`;
/// one quarter of the draws are scaled onto a rational grid to exercise
/// denominators. Rings whose normalization is the full grid are re-rolled so
/// that gap-based constructions stay nontrivial.
pub fn random_coeff_ring(rng: &mut StdRng, max_gen: u64) -> NumericalSemigroup {
    loop {
        let k = rng.random_range(2..=5usize);
        let den = match rng.random_range(0..4u32) {
            0 => rng.random_range(2..=3u64),
            _ => 1,
        };
        let gens: Vec<Exponent> = (0..k)
            .map(|_| Exponent::new(rng.random_range(2..=max_gen), den).unwrap())
            .collect();
        let ring = NumericalSemigroup::from_generators(&gens).unwrap();
        if !ring.gaps_to_full().is_empty() {
            return ring;
        }
    }
}

/// A random equi-gcd algebra: a coefficient ring joined with 1 to 4 of its
/// grid gaps. Joining gap exponents never changes the content, so the result
/// is always equi-gcd.
pub fn random_equi_gcd_algebra(rng: &mut StdRng, max_gen: u64) -> SemigroupAlgebra {
    let coeff = random_coeff_ring(rng, max_gen);
    let gaps: Vec<Exponent> = coeff.gaps_to_full().iter().collect();
    let want = rng.random_range(1..=4usize).min(gaps.len());
    let mut picked: Vec<Exponent> = Vec::with_capacity(want);
    let mut pool = gaps;
    for _ in 0..want {
        let i = rng.random_range(0..pool.len());
        picked.push(pool.swap_remove(i));
    }
    SemigroupAlgebra::by_joining(coeff, &picked).unwrap()
}

/// Runs the full cross-validation suite over `count` random instances.
pub fn run(config: &SelfCheckConfig) -> SelfCheckReport {
    let mut rng = StdRng::seed_from_u64(config.seed);
    let instances: Vec<SemigroupAlgebra> = (0..config.count)
        .map(|_| random_equi_gcd_algebra(&mut rng, config.max_gen))
        .collect();
    let results = par::map_collect(instances, |alg| validate_instance(&alg));
    let mut report = SelfCheckReport {
        instances: config.count,
        ..Default::default()
    };
    for (checks, mut bad) in results {
        report.checks += checks;
        report.discrepancies.append(&mut bad);
    }
    report
}

/// All per-instance comparisons; returns the number of checks performed and
/// any discrepancy descriptions.
pub fn validate_instance(alg: &SemigroupAlgebra) -> (usize, Vec<String>) {
    let mut checks = 0usize;
    let mut bad = Vec::new();
    let tag = format!("{alg}");
    let mut report = |ok: bool, what: &str| {
        if !ok {
            bad.push(format!("{tag}: {what}"));
        }
    };

    // Membership against a plain sieve, up to three times the square of the
    // largest scaled generator.
    let tabs = oracle::bf_tables(alg, 3);
    let scale = tabs.scale;
    checks += 1;
    report(
        (0..=tabs.coeff.bound()).all(|t| {
            let e = tabs.exponent(t);
            tabs.coeff.contains(t) == alg.coeff().contains(e)
                && tabs.ext.contains(t) == alg.ext().contains(e)
        }),
        "membership disagrees with sieve",
    );

    // Gap and sporadic sets.
    let gaps = alg.gap_monomials().unwrap();
    checks += 1;
    report(
        gaps == oracle::bf_gap_monomials(alg),
        "gap set disagrees with sieve",
    );
    checks += 1;
    report(
        alg.sporadic_monomials().unwrap() == oracle::bf_sporadic_monomials(alg),
        "sporadic set disagrees with sieve",
    );

    // Frobenius and pseudo-Frobenius maxima against sieve divisibility.
    let div_ext = |s: Exponent, t: Exponent| {
        t.checked_sub(s)
            .and_then(|d| d.scaled(scale))
            .is_some_and(|d| tabs.ext.contains(d))
    };
    let div_coeff = |s: Exponent, t: Exponent| {
        t.checked_sub(s)
            .and_then(|d| d.scaled(scale))
            .is_some_and(|d| tabs.coeff.contains(d))
    };
    checks += 1;
    report(
        alg.frobenius_monomials().unwrap() == oracle::bf_maximal(&gaps, div_ext),
        "Frobenius monomials disagree with oracle maxima",
    );
    checks += 1;
    report(
        alg.pseudo_frobenius_monomials().unwrap() == oracle::bf_maximal(&gaps, div_coeff),
        "pseudo-Frobenius monomials disagree with oracle maxima",
    );

    // Conductor generators.
    checks += 1;
    report(
        alg.conductor().unwrap().min_generators() == &oracle::bf_conductor_min_generators(alg),
        "conductor generators disagree with oracle",
    );

    // Apéry sets for every minimal generator of the coefficient ring, plus
    // the unique-representative property.
    for &s in alg.coeff().minimal_generators() {
        let apery = alg.coeff().apery_set(s).unwrap();
        let s_scaled = s.scaled(scale).unwrap();
        let mut minima: Vec<u64> = vec![u64::MAX; s_scaled as usize];
        for t in tabs.coeff.members() {
            let r = (t % s_scaled) as usize;
            minima[r] = minima[r].min(t);
        }
        // Residue classes without members contribute nothing (they occur
        // whenever the content exceeds 1).
        let expect: MonomialSet = minima
            .iter()
            .filter(|&&t| t < u64::MAX)
            .map(|&t| tabs.exponent(t))
            .collect();
        checks += 1;
        report(apery == expect, "Apéry set disagrees with residue minima");

        // Exactly one k >= 0 with m - k*s in the Apéry set, equivalently
        // exactly one Apéry element below m in its congruence class.
        checks += 1;
        let apery_scaled: Vec<u64> = apery.iter().map(|e| e.scaled(scale).unwrap()).collect();
        let unique = tabs
            .coeff
            .members()
            .take_while(|&m| m <= tabs.coeff.bound() / 2)
            .all(|m| {
                let hits = apery_scaled
                    .iter()
                    .filter(|&&a| a <= m && (m - a) % s_scaled == 0)
                    .count();
                hits == 1
            });
        report(unique, "member not uniquely represented over the Apéry set");
    }

    // Extension lattice and irreducibility on small gap sets.
    if gaps.len() <= 10 {
        let bf = oracle::bf_all_intermediate(alg).unwrap();
        let fast = lattice::enumerate_extensions(alg).unwrap();
        checks += 1;
        report(bf.len() == fast.len(), "extension counts disagree");

        if !alg.is_trivial() {
            let bf_masks: Vec<MonomialSet> = bf
                .iter()
                .map(|t| gaps.iter().filter(|&g| t.contains(g)).collect())
                .collect();
            let bf_irreducible = !bf_masks.iter().enumerate().any(|(i, a)| {
                bf_masks
                    .iter()
                    .skip(i + 1)
                    .any(|b| !a.is_empty() && !b.is_empty() && a.intersection(b).is_empty())
            });
            checks += 1;
            report(
                classify::classify(alg).unwrap().irreducible == bf_irreducible,
                "irreducibility criterion disagrees with brute force",
            );
        }
    }

    (checks, bad)
}
