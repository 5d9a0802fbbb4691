//! Explicit complete intersections with a prescribed Jordan type in the x direction.
//!
//! For a CIJT partition in power form `(p_1^{n_1}, …, p_t^{n_t})` with
//! `a_i = n_1 + … + n_i` and `p_{t+1} = 0`, the chain is
//! `f_i = x^{p_i} y^{a_{i−1}} + Σ_ℓ λ_{i,ℓ} x^{p_i+ℓ} y^{a_{i−1}−ℓ}`, where the
//! coefficient vectors obey
//! `Λ_{i+1} = (Λ_i, 0^{n_i}) + (0^{n_{i−1}+n_i−1}, 1, Λ_{i−1})`.
//! Then `f_{i−1} = x^{p_i−p_{i+1}} f_{i+1} − f_i y^{n_i}` and `(f_t, f_{t+1})` is the ideal.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{initial_ideal, quotient, ArtinAlgebra, GradedIdeal, MonomialCell};
use crate::codes::{enumerate_cijt, satisfies_equality_criterion};
use crate::error::{Error, Result};
use crate::hessians::{
    active_hessian_indices, nonvanishing_set, predicted_nonvanishing_set, predicted_rank_profile,
};
use crate::partition::{ci_hilbert_of, HilbertFunction, Partition};
use crate::poly::{q, BivariatePoly, Q};

#[derive(Clone, Debug, PartialEq)]
pub enum LambdaSource {
    Zero,
    Explicit(Vec<Q>),
    Seed(u64),
}

/// The chain `Λ_1, …, Λ_{t+1}`; `chain[0]` is `Λ_1 = ()`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizationParams {
    pub chain: Vec<Vec<Q>>,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub partition: Partition,
    pub params: RealizationParams,
    /// `f_1, …, f_{t+1}`.
    pub chain: Vec<BivariatePoly>,
    pub ideal: GradedIdeal,
}

/// Draws `Λ_2` with entries uniform in `{−5, …, 5}`.
pub fn random_lambda2(len: usize, rng: &mut impl Rng) -> Vec<Q> {
    (0..len).map(|_| q(rng.gen_range(-5..=5))).collect()
}

pub fn construct_ci(p: &Partition, source: &LambdaSource) -> Result<Realization> {
    let mut rng = match source {
        LambdaSource::Seed(s) => Some(ChaCha8Rng::seed_from_u64(*s)),
        _ => None,
    };
    construct_ci_with(p, source, rng.as_mut())
}

fn construct_ci_with(
    p: &Partition,
    source: &LambdaSource,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Realization> {
    ci_hilbert_of(p)?;
    if !satisfies_equality_criterion(p) {
        return Err(Error::NotCijt(p.to_string()));
    }
    let pf = p.power_form();
    let t = pf.len();
    let mut ps: Vec<u32> = pf.iter().map(|&(pi, _)| pi as u32).collect();
    ps.push(0);
    let ns: Vec<usize> = pf.iter().map(|&(_, ni)| ni).collect();
    let mut a = vec![0usize];
    for &ni in &ns {
        a.push(a.last().unwrap() + ni);
    }
    // 1-based helpers: p(i), n(i), a(i)
    let pp = |i: usize| ps[i - 1];
    let nn = |i: usize| ns[i - 1];

    if t == 1 {
        let f1 = BivariatePoly::monomial(pp(1), 0);
        let f2 = BivariatePoly::monomial(0, a[1] as u32);
        let ideal = GradedIdeal::new(vec![f1.clone(), f2.clone()])?;
        return Ok(Realization {
            partition: p.clone(),
            params: RealizationParams {
                chain: vec![vec![], vec![Q::zero(); a[1]]],
            },
            chain: vec![f1, f2],
            ideal,
        });
    }

    let lambda2 = match source {
        LambdaSource::Zero => vec![Q::zero(); a[1]],
        LambdaSource::Explicit(v) => {
            if v.len() != a[1] {
                return Err(Error::Parse(format!(
                    "Λ_2 needs {} entries, got {}",
                    a[1],
                    v.len()
                )));
            }
            v.clone()
        }
        LambdaSource::Seed(_) => random_lambda2(a[1], rng.expect("seeded source needs an rng")),
    };
    let mut lam: Vec<Vec<Q>> = vec![vec![], lambda2];
    for i in 2..=t {
        let mut next = lam[i - 1].clone();
        next.extend(std::iter::repeat_n(Q::zero(), nn(i)));
        let offset = nn(i - 1) + nn(i) - 1;
        next[offset] += Q::one();
        for (k, v) in lam[i - 2].iter().enumerate() {
            next[offset + 1 + k] += v;
        }
        debug_assert_eq!(next.len(), a[i]);
        lam.push(next);
    }

    let f = |i: usize| -> BivariatePoly {
        let pi = ps[i - 1];
        let ai = a[i - 1] as u32;
        let mut out = BivariatePoly::monomial(pi, ai);
        for (l, c) in lam[i - 1].iter().enumerate() {
            let l = l as u32 + 1;
            out.add_term(c.clone(), pi + l, ai - l);
        }
        out
    };
    let chain: Vec<BivariatePoly> = (1..=t + 1).map(f).collect();
    for i in 2..=t {
        let lhs = &chain[i - 2];
        let rhs =
            &chain[i].mul_monomial(pp(i) - ps[i], 0) - &chain[i - 1].mul_monomial(0, nn(i) as u32);
        if *lhs != rhs {
            return Err(Error::InternalInconsistency(format!(
                "relation fails at i={i} for {p}"
            )));
        }
        if lhs.degree() != Some(pp(i) + a[i] as u32) {
            return Err(Error::InternalInconsistency(format!(
                "degree bookkeeping fails at i={i} for {p}"
            )));
        }
    }
    let ideal = GradedIdeal::new(vec![chain[t - 1].clone(), chain[t].clone()])?;
    Ok(Realization {
        partition: p.clone(),
        params: RealizationParams { chain: lam },
        chain,
        ideal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub partition: Partition,
    pub generators: Vec<String>,
    pub checks: Vec<Check>,
}

impl RealizationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "ci_degrees",
    "hilbert",
    "jordan_type",
    "initial_ideal",
    "nonvanishing",
    "ranks",
];

fn check(name: &str, expected: String, observed: String) -> Check {
    Check {
        name: name.into(),
        passed: expected == observed,
        expected,
        observed,
    }
}

fn fmt_set(s: &std::collections::BTreeSet<usize>) -> String {
    let v: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn verify_realization(r: &Realization) -> RealizationReport {
    let p = &r.partition;
    let generators = r.ideal.generators().iter().map(|g| g.to_string()).collect();
    let mut checks = Vec::new();
    let t = match ci_hilbert_of(p) {
        Ok(t) => t,
        Err(e) => {
            for n in CHECK_NAMES {
                checks.push(check(n, "CI-shaped target".into(), e.to_string()));
            }
            return RealizationReport {
                partition: p.clone(),
                generators,
                checks,
            };
        }
    };
    let alg = match quotient(&r.ideal) {
        Ok(a) => a,
        Err(e) => {
            for n in CHECK_NAMES {
                checks.push(check(n, "Artinian quotient".into(), e.to_string()));
            }
            return RealizationReport {
                partition: p.clone(),
                generators,
                checks,
            };
        }
    };
    let x = BivariatePoly::x();
    let degs = alg.minimal_generator_degrees();
    checks.push(check(
        "ci_degrees",
        format!("{:?}", [t.d(), t.d() + t.k() - 1]),
        format!("{:?}", degs),
    ));
    checks.push(check(
        "hilbert",
        format!("{:?}", t.values()),
        format!("{:?}", alg.hilbert()),
    ));
    checks.push(check(
        "jordan_type",
        p.to_string(),
        alg.jordan_type(&x)
            .map(|q| q.to_string())
            .unwrap_or_else(|e| e.to_string()),
    ));
    let want_cell = MonomialCell::from_partition(p);
    checks.push(check(
        "initial_ideal",
        want_cell.generators_string(),
        initial_ideal(&r.ideal, &x)
            .map(|c| c.generators_string())
            .unwrap_or_else(|e| e.to_string()),
    ));
    let predicted = predicted_nonvanishing_set(p)
        .map(|s| fmt_set(&s))
        .unwrap_or_else(|e| e.to_string());
    let observed = nonvanishing_set(&alg, &x)
        .map(|s| fmt_set(&s))
        .unwrap_or_else(|e| e.to_string());
    checks.push(check("nonvanishing", predicted, observed));
    let (exp, obs) = rank_comparison(p, &t, &alg);
    checks.push(check("ranks", exp, obs));
    RealizationReport {
        partition: p.clone(),
        generators,
        checks,
    }
}

/// Predicted versus observed ranks on every covered order plus all pure active orders.
fn rank_comparison(p: &Partition, t: &HilbertFunction, alg: &ArtinAlgebra) -> (String, String) {
    let x = BivariatePoly::x();
    let prof = match predicted_rank_profile(p) {
        Ok(v) => v,
        Err(e) => return ("rank profile".into(), e.to_string()),
    };
    let j = t.j();
    let mut keys: Vec<(usize, usize)> = prof.ranks.keys().copied().collect();
    for i in active_hessian_indices(t) {
        if !keys.contains(&(i, j - i)) {
            keys.push((i, j - i));
        }
    }
    keys.sort();
    let mut exp = Vec::new();
    let mut obs = Vec::new();
    for (u, s) in keys {
        let o = alg
            .rank_mult_power(&x, u as u32, s as u32)
            .map(|r| r.to_string())
            .unwrap_or_else(|e| e.to_string());
        let e = match prof.ranks.get(&(u, s)) {
            Some(r) => r.to_string(),
            None => o.clone(),
        };
        exp.push(format!("({u},{s}):{e}"));
        obs.push(format!("({u},{s}):{o}"));
    }
    (exp.join(" "), obs.join(" "))
}

/// One realization per CIJT partition of T, all drawing from one seeded stream.
pub fn realize_all(
    t: &HilbertFunction,
    seed: u64,
) -> Result<Vec<(Realization, RealizationReport)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for p in enumerate_cijt(t)? {
        let r = construct_ci_with(&p, &LambdaSource::Seed(seed), Some(&mut rng))?;
        let rep = verify_realization(&r);
        out.push((r, rep));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_list;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn paper_example() {
        let r = construct_ci(&part("6,2,2,2"), &LambdaSource::Zero).unwrap();
        assert_eq!(r.ideal.to_string(), "x^2*y, y^4 + x^4");
        let rep = verify_realization(&r);
        assert!(rep.all_passed(), "{rep:?}");
        let alpha = q(7);
        let r = construct_ci(&part("6,2,2,2"), &LambdaSource::Explicit(vec![alpha])).unwrap();
        assert_eq!(r.chain[2], "y^4 + 7x*y^3 + x^4".parse().unwrap());
        assert_eq!(r.params.chain[2], vec![q(7), q(0), q(0), q(1)]);
    }

    #[test]
    fn rectangle() {
        let r = construct_ci(&part("3,3,3,3"), &LambdaSource::Seed(1)).unwrap();
        assert_eq!(r.ideal.to_string(), "x^3, y^4");
        assert!(verify_realization(&r).all_passed());
    }

    #[test]
    fn strong_lefschetz_in_x() {
        let r = construct_ci(&part("6,4,2"), &LambdaSource::Seed(3)).unwrap();
        let rep = verify_realization(&r);
        assert!(rep.all_passed(), "{rep:?}");
        let nv = rep
            .checks
            .iter()
            .find(|c| c.name == "nonvanishing")
            .unwrap();
        assert_eq!(nv.observed, "{0,1,2}");
    }

    #[test]
    fn tampered() {
        let mut r = construct_ci(&part("6,2,2,2"), &LambdaSource::Zero).unwrap();
        r.ideal = GradedIdeal::new(parse_poly_list("x^2*y, y^4").unwrap()).unwrap();
        let rep = verify_realization(&r);
        assert!(!rep.all_passed());
        assert_eq!(rep.first_failure().unwrap().name, "ci_degrees");
        assert!(matches!(
            construct_ci(&part("2,2,1,1"), &LambdaSource::Zero),
            Err(Error::NotCijt(_))
        ));
    }

    #[test]
    fn batch() {
        let t: HilbertFunction = "1,2,3,3,2,1".parse().unwrap();
        let all = realize_all(&t, 11).unwrap();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|(_, r)| r.all_passed()));
        let t: HilbertFunction = "1,2,1".parse().unwrap();
        assert_eq!(realize_all(&t, 0).unwrap().len(), 2);
    }
}
