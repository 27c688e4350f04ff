use proptest::prelude::*;
use twistlab::matrix::SparseEchelon;
use twistlab::{FieldDescriptor, MatrixOfScalars};

const P: i64 = 7;

fn field() -> FieldDescriptor {
    FieldDescriptor::prime(P as u32).unwrap()
}

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> MatrixOfScalars {
    let f = field();
    MatrixOfScalars::new(f, rows, cols, entries.iter().map(|&x| f.from_i64(x)).collect()).unwrap()
}

/// Cofactor expansion along the first row, reduced mod `P`.
fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    let mut total = 0;
    for j in 0..m.len() {
        let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total = (total + sign * m[0][j] * det(&minor)).rem_euclid(P);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
        s.push(last);
        s
    }))
    .collect()
}

/// Largest `k` with a nonzero `k × k` minor.
fn minor_rank(rows: usize, cols: usize, e: &[i64]) -> usize {
    (1..=rows.min(cols))
        .rev()
        .find(|&k| {
            subsets(rows, k).iter().any(|rs| {
                subsets(cols, k).iter().any(|cs| {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| e[r * cols + c]).collect()).collect();
                    det(&sub) != 0
                })
            })
        })
        .unwrap_or(0)
}

fn dims_and_entries() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(0..P, r * c)))
}

proptest! {
    #[test]
    fn rank_matches_minors((r, c, e) in dims_and_entries()) {
        prop_assert_eq!(matrix(r, c, &e).rank(), minor_rank(r, c, &e));
    }

    #[test]
    fn rank_plus_nullity((r, c, e) in dims_and_entries()) {
        let m = matrix(r, c, &e);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), c);
        for v in &kernel {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kron_rank_is_product((r, c, e) in dims_and_entries(), (s, d, g) in dims_and_entries()) {
        let a = matrix(r, c, &e);
        let b = matrix(s, d, &g);
        prop_assert_eq!(a.kron(&b).unwrap().rank(), a.rank() * b.rank());
    }

    #[test]
    fn inverse_exists_iff_determinant_nonzero(e in prop::collection::vec(0..P, 9)) {
        let m = matrix(3, 3, &e);
        let rows: Vec<Vec<i64>> = e.chunks(3).map(<[i64]>::to_vec).collect();
        match m.inverse() {
            Ok(inv) => {
                prop_assert_ne!(det(&rows), 0);
                prop_assert_eq!(m.mul(&inv).unwrap(), MatrixOfScalars::identity(field(), 3));
            }
            Err(_) => prop_assert_eq!(det(&rows), 0),
        }
    }

    #[test]
    fn sparse_echelon_agrees_with_dense((r, c, e) in dims_and_entries()) {
        let f = field();
        let mut echelon = SparseEchelon::new(f, c);
        for row in e.chunks(c) {
            let sparse = row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, f.from_i64(x))).collect();
            echelon.insert(sparse);
        }
        prop_assert_eq!(echelon.rank(), matrix(r, c, &e).rank());
    }

    #[test]
    fn rational_solve_round_trip(e in prop::collection::vec(-5i64..=5, 9), b in prop::collection::vec(-5i64..=5, 3)) {
        let q = FieldDescriptor::RATIONALS;
        let m = MatrixOfScalars::new(q, 3, 3, e.iter().map(|&x| q.from_i64(x)).collect()).unwrap();
        let b: Vec<_> = b.iter().map(|&x| q.from_i64(x)).collect();
        if let Some(x) = m.solve(&b).unwrap() {
            prop_assert_eq!(m.apply(&x).unwrap(), b);
        } else {
            prop_assert!(m.rank() < 3);
        }
    }
}
