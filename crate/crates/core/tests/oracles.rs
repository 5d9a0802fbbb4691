//! Brute-force oracles, written independently of the library's own shortcuts.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use jtlab::algebra::{
    annihilator, initial_ideal, quotient, ArtinAlgebra, GradedIdeal, MonomialCell,
};
use jtlab::codes::{enumerate_cijt, enumerate_diagonal_partitions, is_cijt};
use jtlab::partition::partitions_of;
use jtlab::poly::q;
use jtlab::realize::{construct_ci, LambdaSource};
use jtlab::{BivariatePoly, HilbertFunction, Partition, Q};

/// Counts cells on each anti-diagonal straight from the Ferrers diagram.
fn diagonal_counts(p: &Partition) -> Vec<usize> {
    let mut out = Vec::new();
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 0..len {
            if out.len() <= r + c {
                out.resize(r + c + 1, 0);
            }
            out[r + c] += 1;
        }
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn plain_rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let sub = &f * &m[rank][k];
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Q::zero(), |acc, (x, br)| acc + x * &br[j])
                })
                .collect()
        })
        .collect()
}

/// Jordan type from ranks of powers of the full multiplication matrix on A.
fn full_matrix_jordan_type(alg: &ArtinAlgebra, ell: &BivariatePoly) -> Partition {
    let h = alg.hilbert();
    let offsets: Vec<usize> = h
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let n: usize = h.iter().sum();
    let mut m = vec![vec![Q::zero(); n]; n];
    for i in 0..h.len().saturating_sub(1) {
        for (col, b) in alg.basis(i as u32).iter().enumerate() {
            let image = alg.normal_form(&(b * ell), i as u32 + 1);
            for (row, v) in image.into_iter().enumerate() {
                m[offsets[i + 1] + row][offsets[i] + col] = v;
            }
        }
    }
    let mut ranks = vec![n];
    let mut power = m.clone();
    loop {
        let r = plain_rank(power.clone());
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = mat_mul(&power, &m);
    }
    let mut parts = Vec::new();
    for s in 1..ranks.len() {
        let at_least = ranks[s - 1] - ranks[s];
        let more = if s + 1 < ranks.len() {
            ranks[s] - ranks[s + 1]
        } else {
            0
        };
        parts.extend(std::iter::repeat_n(s, at_least - more));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

fn random_form(rng: &mut ChaCha8Rng, j: u32) -> BivariatePoly {
    loop {
        let mut f = BivariatePoly::zero();
        for a in 0..=j {
            if rng.gen_bool(0.6) {
                f.add_term(q(rng.gen_range(-4..=4)), a, j - a);
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

#[test]
fn diagonal_partitions_match_filtered_partition_lists() {
    let mut shapes = vec![(6, 1)];
    for d in 2..=5 {
        for k in 1..=3 {
            shapes.push((d, k));
        }
    }
    for (d, k) in shapes {
        let t = HilbertFunction::from_dk(d, k).unwrap();
        let brute: BTreeSet<Partition> = partitions_of(t.size())
            .into_iter()
            .filter(|p| diagonal_counts(p) == t.values())
            .collect();
        let listed: BTreeSet<Partition> = enumerate_diagonal_partitions(&t)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(brute, listed, "T={t}");
    }
}

#[test]
fn cijt_list_matches_realizability_filter() {
    // a partition is CIJT exactly when the explicit construction reproduces it
    for (d, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)] {
        let t = HilbertFunction::from_dk(d, k).unwrap();
        let mut realizable = BTreeSet::new();
        for p in enumerate_diagonal_partitions(&t).unwrap() {
            if let Ok(r) = construct_ci(&p, &LambdaSource::Seed(3)) {
                let alg = quotient(&r.ideal).unwrap();
                if alg.hilbert() == t.values() && alg.jordan_type(&BivariatePoly::x()).unwrap() == p
                {
                    realizable.insert(p);
                }
            }
        }
        let listed: BTreeSet<Partition> = enumerate_cijt(&t).unwrap().into_iter().collect();
        assert_eq!(realizable, listed, "T={t}");
    }
}

#[test]
fn monomial_quotients_have_jordan_type_q() {
    for n in 1..=16 {
        for p in partitions_of(n) {
            let alg = quotient(&MonomialCell::from_partition(&p).ideal()).unwrap();
            assert_eq!(alg.dim(), n);
            assert_eq!(
                alg.jordan_type(&BivariatePoly::x()).unwrap(),
                p,
                "x on R/E_Q"
            );
            assert_eq!(alg.hilbert(), diagonal_counts(&p));
        }
    }
}

#[test]
fn graded_blocks_agree_with_full_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..40 {
        let j = rng.gen_range(2..=7);
        let f = random_form(&mut rng, j);
        let alg = quotient(&annihilator(&f).unwrap()).unwrap();
        let ell = BivariatePoly::linear(&q(rng.gen_range(-3..=3)), &q(rng.gen_range(1..=3)));
        assert_eq!(
            alg.jordan_type(&ell).unwrap(),
            full_matrix_jordan_type(&alg, &ell),
            "F={f}, ell={ell}"
        );
        assert_eq!(
            alg.jordan_type(&BivariatePoly::x()).unwrap(),
            full_matrix_jordan_type(&alg, &BivariatePoly::x())
        );
    }
    for p in ["3,2,2,1", "4,4,1", "5,3,3,2,1"] {
        let p: Partition = p.parse().unwrap();
        let alg = quotient(&MonomialCell::from_partition(&p).ideal()).unwrap();
        let ell = BivariatePoly::linear(&q(1), &q(1));
        assert_eq!(
            alg.jordan_type(&ell).unwrap(),
            full_matrix_jordan_type(&alg, &ell)
        );
    }
}

#[test]
fn gorenstein_duals_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let j = rng.gen_range(1..=8);
        let f = random_form(&mut rng, j);
        let alg = quotient(&annihilator(&f).unwrap()).unwrap();
        let h = alg.hilbert();
        assert_eq!(alg.top_degree(), j);
        assert!(h.iter().eq(h.iter().rev()), "H not symmetric for F={f}");
        for ell in [
            BivariatePoly::x(),
            BivariatePoly::y(),
            BivariatePoly::linear(&q(2), &q(-1)),
        ] {
            let jdt = alg.jordan_degree_type(&ell).unwrap();
            assert!(jdt.is_symmetric(j as usize), "F={f}, ell={ell}: {jdt:?}");
            assert_eq!(jdt.partition(), alg.jordan_type(&ell).unwrap());
            assert_eq!(jdt.coverage(), h);
        }
    }
}

#[test]
fn realizations_do_not_depend_on_parameters() {
    for (d, k) in [(2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (3, 3)] {
        let t = HilbertFunction::from_dk(d, k).unwrap();
        for p in enumerate_cijt(&t).unwrap() {
            let zero = construct_ci(&p, &LambdaSource::Zero).unwrap();
            let cell = initial_ideal(&zero.ideal, &BivariatePoly::x()).unwrap();
            for seed in 0..10 {
                let r = construct_ci(&p, &LambdaSource::Seed(seed)).unwrap();
                let alg = quotient(&r.ideal).unwrap();
                assert_eq!(
                    alg.jordan_type(&BivariatePoly::x()).unwrap(),
                    p,
                    "P={p}, seed {seed}"
                );
                assert_eq!(
                    initial_ideal(&r.ideal, &BivariatePoly::x()).unwrap(),
                    cell,
                    "P={p}, seed {seed}"
                );
            }
        }
    }
}

#[test]
fn power_ranks_factor_through_intermediate_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..30 {
        let j = rng.gen_range(3..=7);
        let f = random_form(&mut rng, j);
        let alg = quotient(&annihilator(&f).unwrap()).unwrap();
        let ell = BivariatePoly::linear(&q(1), &q(rng.gen_range(-2..=2)));
        for u in 0..=j {
            for m in u..=j {
                for s in m..=j {
                    let whole = alg.rank_mult_power(&ell, u, s).unwrap();
                    let first = alg.rank_mult_power(&ell, u, m).unwrap();
                    let second = alg.rank_mult_power(&ell, m, s).unwrap();
                    assert!(whole <= first.min(second), "F={f}, {u}->{m}->{s}");
                    assert!(whole <= alg.dim_at(u).min(alg.dim_at(s)));
                }
            }
        }
    }
}

#[test]
fn non_ci_ideals_are_not_cijt() {
    // (xy, x^3, y^4) has three generators; its x type must not be listed as CIJT
    let ideal = GradedIdeal::new(jtlab::poly::parse_poly_list("x*y, x^3, y^4").unwrap()).unwrap();
    let p = quotient(&ideal)
        .unwrap()
        .jordan_type(&BivariatePoly::x())
        .unwrap();
    assert!(!is_cijt(&p).unwrap());
}
