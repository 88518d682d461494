use std::sync::Arc;

use coeff_core::{quotient_by_span, rank, FreeModule, Ring, Scalar, SparseMap, Vector};
use proptest::prelude::*;

fn module(r: usize) -> Arc<FreeModule<usize>> {
    Arc::new(FreeModule::new((0..r).collect()).unwrap())
}

fn map_from_dense(src: &Arc<FreeModule<usize>>, tgt: &Arc<FreeModule<usize>>, m: &[Vec<i64>]) -> SparseMap<usize, usize> {
    let entries = (0..src.rank())
        .flat_map(|j| (0..tgt.rank()).map(move |i| (j, i, Scalar::from(m[i][j]))));
    SparseMap::from_entries(src.clone(), tgt.clone(), entries).unwrap()
}

fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..a.len())
        .map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn mat3() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3)
}

proptest! {
    #[test]
    fn compose_matches_dense_product(a in mat3(), b in mat3()) {
        let m = module(3);
        let f = map_from_dense(&m, &m, &b);
        let g = map_from_dense(&m, &m, &a);
        let gf = SparseMap::compose(&g, &f).unwrap();
        prop_assert_eq!(gf, map_from_dense(&m, &m, &dense_mul(&a, &b)));
    }

    #[test]
    fn compose_is_associative(a in mat3(), b in mat3(), c in mat3()) {
        let m = module(3);
        let (f, g, h) = (map_from_dense(&m, &m, &a), map_from_dense(&m, &m, &b), map_from_dense(&m, &m, &c));
        let left = SparseMap::compose(&h, &SparseMap::compose(&g, &f).unwrap()).unwrap();
        let right = SparseMap::compose(&SparseMap::compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_a_unit(a in mat3()) {
        let m = module(3);
        let f = map_from_dense(&m, &m, &a);
        let id = SparseMap::identity(m.clone());
        prop_assert_eq!(SparseMap::compose(&f, &id).unwrap(), f.clone());
        prop_assert_eq!(SparseMap::compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn quotient_rank_identity(
        rels in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..6),
        p in prop::sample::select(vec![Ring::Rat, Ring::Mod(2), Ring::Mod(7)]),
    ) {
        let v = module(5);
        let rels: Vec<Vector<usize>> = rels
            .iter()
            .map(|r| r.iter().enumerate().map(|(i, c)| (i, Scalar::from(*c))).collect())
            .collect();
        let (q, proj) = quotient_by_span(&v, &rels, p).unwrap();
        prop_assert_eq!(v.rank(), q.rank() + rank(&rels, p).unwrap());
        for r in &rels {
            let img = proj.apply(r).unwrap();
            prop_assert!(img.iter().all(|(_, c)| p.coerce(c).unwrap().is_zero()));
        }
    }
}
