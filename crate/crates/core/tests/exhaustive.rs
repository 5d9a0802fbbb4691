//! Exhaustive checks over every CI-shaped T with d ≤ 6, k ≤ 4.

use std::collections::BTreeSet;

use jtlab::codes::{
    cell_dimension, enumerate_cijt, enumerate_diagonal_partitions, hook_code_direct, iota, is_cijt,
};
use jtlab::{HilbertFunction, Partition};

fn shapes() -> impl Iterator<Item = HilbertFunction> {
    (2..=6).flat_map(|d| (1..=4).map(move |k| HilbertFunction::from_dk(d, k).unwrap()))
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn conjugates_have_complementary_hook_codes() {
    for t in shapes() {
        let max = hook_code_direct(&t.sl_partition()).unwrap().counts;
        for q in enumerate_diagonal_partitions(&t).unwrap() {
            let a = hook_code_direct(&q).unwrap().counts;
            let b = hook_code_direct(&q.conjugate()).unwrap().counts;
            let sum: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            assert_eq!(sum, max, "T={t}, P={q}");
        }
    }
}

#[test]
fn hook_codes_fill_the_box_under_the_strong_lefschetz_code() {
    for t in shapes() {
        let max = hook_code_direct(&t.sl_partition()).unwrap().counts;
        let codes: BTreeSet<Vec<usize>> = enumerate_diagonal_partitions(&t)
            .unwrap()
            .iter()
            .map(|q| hook_code_direct(q).unwrap().counts)
            .collect();
        let box_size: usize = max.iter().map(|m| m + 1).product();
        assert_eq!(codes.len(), box_size, "T={t}");
        assert!(codes
            .iter()
            .all(|c| c.iter().zip(&max).all(|(x, m)| x <= m)));
    }
}

#[test]
fn cijt_is_the_filtered_subset_with_d_or_d_plus_k_minus_1_parts() {
    for t in shapes() {
        let all = enumerate_diagonal_partitions(&t).unwrap();
        let filtered: BTreeSet<Partition> = all
            .iter()
            .filter(|q| is_cijt(q).unwrap())
            .cloned()
            .collect();
        let listed = enumerate_cijt(&t).unwrap();
        assert_eq!(
            listed.iter().cloned().collect::<BTreeSet<_>>(),
            filtered,
            "T={t}"
        );
        assert_eq!(listed.len(), filtered.len(), "duplicates for T={t}");
        for q in &listed {
            let ok = if t.k() == 1 {
                q.len() == t.d()
            } else {
                q.len() == t.d() || q.len() == t.d() + t.k() - 1
            };
            assert!(ok, "T={t}, P={q}");
        }
    }
}

#[test]
fn listed_examples() {
    assert_eq!(cell_dimension(&p("6,4,2")), 5);
    assert_eq!(cell_dimension(&p("3,3,3,3")), 2);
    assert_eq!(cell_dimension(&p("5,3,1")), 4);
    assert_eq!(iota(&p("6,3,3")).unwrap(), p("6,2,2,2"));
    assert_eq!(iota(&p("6,4,2")).unwrap(), p("6,4,1,1"));
    assert_eq!(iota(&p("4,4")).unwrap(), p("2,2,2,2"));
    assert!(iota(&p("6,2,2,2")).is_err());
    assert!(iota(&p("6,3,1,1,1")).is_err());
}

#[test]
fn rectangle_flip_on_the_height_five_table() {
    for k in 1..=4usize {
        let src = Partition::new(vec![8 + k, 5 + k, 5 + k, 1 + k, 1 + k]).unwrap();
        let mut want = vec![8 + k, 5 + k, 5 + k];
        want.extend(std::iter::repeat_n(2, k + 1));
        assert_eq!(iota(&src).unwrap(), Partition::new(want).unwrap(), "k={k}");
    }
}
