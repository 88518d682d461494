use coeff_core::{Scalar, Tensor, Vector};
use colored_core::Bidegree;
use koszul_dual::WedgeTuple;

use crate::face_module::FaceModule;

/// `X ⊗ Y` with `(X⊗Y)_{n,m} = ⊕ X_{q,s} ⊗ Y_{l,t}` over `q+l = n`,
/// `s+t = m`, the differential `d(x⊗y) = dx⊗y + (-1)^{q+s} x⊗dy` and the
/// faces: tuples below `q` act on `x`; tuples above `q` act on `y`, shifted
/// by `-q`, with sign `(-1)^{(k-1)q+s}`; tuples reaching `q` vanish.
pub struct TensorFaceModule<X, Y> {
    pub x: X,
    pub y: Y,
    /// Largest total level included in the region.
    pub n_max: i64,
}

impl<X: FaceModule, Y: FaceModule> TensorFaceModule<X, Y> {
    pub fn new(x: X, y: Y, n_max: i64) -> Self {
        TensorFaceModule { x, y, n_max }
    }
}

impl<X: FaceModule, Y: FaceModule> FaceModule for TensorFaceModule<X, Y> {
    type K = Tensor<X::K, Y::K>;

    fn bidegree(&self, Tensor(a, b): &Self::K) -> Bidegree {
        let (p, q) = (self.x.bidegree(a), self.y.bidegree(b));
        Bidegree::new(p.n + q.n, p.m + q.m)
    }

    fn region(&self) -> Vec<(Bidegree, Vec<Self::K>)> {
        let mut out: std::collections::BTreeMap<Bidegree, Vec<Self::K>> = Default::default();
        let yr = self.y.region();
        for (bx, kx) in self.x.region() {
            for (by, ky) in &yr {
                if bx.n + by.n > self.n_max {
                    continue;
                }
                let slot = out.entry(Bidegree::new(bx.n + by.n, bx.m + by.m)).or_default();
                for a in &kx {
                    for b in ky {
                        slot.push(Tensor(a.clone(), b.clone()));
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    fn d(&self, Tensor(a, b): &Self::K) -> Vector<Self::K> {
        let p = self.x.bidegree(a);
        let mut v: Vector<Self::K> = self.x.d(a).iter().map(|(l, c)| (Tensor(l.clone(), b.clone()), c.clone())).collect();
        let e = Scalar::sign(p.n + p.m);
        for (l, c) in &self.y.d(b) {
            v.add_term(Tensor(a.clone(), l.clone()), &e * c);
        }
        v
    }

    fn face(&self, w: &WedgeTuple, Tensor(a, b): &Self::K) -> Vector<Self::K> {
        let p = self.x.bidegree(a);
        let q = p.n;
        let l = self.y.bidegree(b).n;
        if w.n() != q + l || w.is_unit() {
            return Vector::zero();
        }
        let idx = w.indices();
        let (first, last) = (idx[0], idx[idx.len() - 1]);
        if last < q {
            let wx = WedgeTuple::new(q, idx.to_vec()).expect("indices below q");
            self.x.face(&wx, a).iter().map(|(u, c)| (Tensor(u.clone(), b.clone()), c.clone())).collect()
        } else if first > q {
            let k = idx.len() as i64;
            let wy = WedgeTuple::new(l, idx.iter().map(|i| i - q).collect()).expect("shifted indices in range");
            let e = Scalar::sign((k - 1) * q + p.m);
            self.y.face(&wy, b).iter().map(|(u, c)| (Tensor(a.clone(), u.clone()), &e * c)).collect()
        } else {
            Vector::zero()
        }
    }
}
