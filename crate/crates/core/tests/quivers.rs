use proptest::prelude::*;
use twistlab::quiver::{standard_quiver, Quiver};

/// `A^n` for the adjacency matrix of `q`.
fn adjacency_power(q: &Quiver, n: usize) -> Vec<Vec<usize>> {
    let v = q.vertex_count();
    let mut adj = vec![vec![0; v]; v];
    for &(s, t) in q.arrows() {
        adj[s][t] += 1;
    }
    let mut m: Vec<Vec<usize>> = (0..v).map(|i| (0..v).map(|j| usize::from(i == j)).collect()).collect();
    for _ in 0..n {
        m = (0..v).map(|i| (0..v).map(|j| (0..v).map(|k| m[i][k] * adj[k][j]).sum()).collect()).collect();
    }
    m
}

fn quivers() -> impl Strategy<Value = Quiver> {
    (1usize..=3)
        .prop_flat_map(|v| (Just(v), prop::collection::vec((0..v, 0..v), 0..=4)))
        .prop_map(|(v, arrows)| Quiver::new(v, arrows).unwrap())
}

proptest! {
    #[test]
    fn path_counts_match_adjacency_powers(q in quivers(), n in 0usize..=4) {
        let total: usize = adjacency_power(&q, n).iter().flatten().sum();
        let paths = q.paths_of_length(n).unwrap();
        prop_assert_eq!(paths.len(), total);
        for p in &paths {
            prop_assert_eq!(p.len(), n);
        }
    }

    #[test]
    fn parallel_count_symmetric_and_matches(q in quivers(), n in 0usize..=3, m in 0usize..=3) {
        let (an, am) = (adjacency_power(&q, n), adjacency_power(&q, m));
        let v = q.vertex_count();
        let expected: usize = (0..v).flat_map(|s| (0..v).map(move |t| (s, t))).map(|(s, t)| an[s][t] * am[s][t]).sum();
        prop_assert_eq!(q.parallel_count(n, m).unwrap(), expected);
        prop_assert_eq!(q.parallel_count(m, n).unwrap(), expected);
        prop_assert_eq!(q.parallel_pairs(n, m).unwrap().len(), expected);
    }

    #[test]
    fn acyclic_iff_paths_die_out(q in quivers()) {
        let v = q.vertex_count();
        let dies = q.paths_of_length(v).unwrap().is_empty();
        prop_assert_eq!(dies, !q.has_oriented_cycle());
        prop_assert_eq!(q.longest_path_length().is_some(), dies);
    }
}

#[test]
fn crown_path_counts() {
    for c in 1..=5 {
        let q = standard_quiver(&format!("crown({c})")).unwrap();
        assert_eq!(q.is_crown(), Some(c));
        for n in 0..=8 {
            assert_eq!(q.paths_of_length(n).unwrap().len(), c);
            // a length-n path is parallel to a vertex exactly when c divides n
            let closed = if n % c == 0 { c } else { 0 };
            assert_eq!(q.parallel_count(n, 0).unwrap(), closed);
            assert_eq!(q.parallel_count(n, 1).unwrap(), if (n + c - 1) % c == 0 { c } else { 0 });
        }
    }
}

#[test]
fn crown_recognition() {
    assert_eq!(standard_quiver("roundtrip").unwrap().is_crown(), Some(2));
    assert_eq!(standard_quiver("kronecker").unwrap().is_crown(), None);
    assert_eq!(Quiver::new(4, vec![(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap().is_crown(), None);
}
