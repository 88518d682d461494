use coeff_core::{apply_columns, Columns, Error, Key, Scalar, Vector};
use colored_core::{Bidegree, BigradedModule, Report};

/// Strong deformation retract data `η : X → Y`, `ξ : Y → X`, `h : X → X`
/// with `η, ξ` chain maps of bidegree `(0, 0)` and `h` of bidegree `(0, 1)`.
/// Absent columns are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdrData<KX: Ord, KY: Ord> {
    pub eta: Columns<KX, KY>,
    pub xi: Columns<KY, KX>,
    pub h: Columns<KX, KX>,
}

impl<K: Key> SdrData<K, K> {
    /// `η = ξ = 1`, `h = 0`.
    pub fn identity<'a>(keys: impl IntoIterator<Item = &'a K>) -> Self
    where
        K: 'a,
    {
        let id: Columns<K, K> = keys.into_iter().map(|k| (k.clone(), Vector::basis(k.clone()))).collect();
        SdrData { eta: id.clone(), xi: id, h: Columns::new() }
    }
}

impl<KX: Key, KY: Key> SdrData<KX, KY> {
    pub fn eta_of(&self, v: &Vector<KX>) -> Vector<KY> {
        apply_columns(&self.eta, v)
    }
    pub fn xi_of(&self, v: &Vector<KY>) -> Vector<KX> {
        apply_columns(&self.xi, v)
    }
    pub fn h_of(&self, v: &Vector<KX>) -> Vector<KX> {
        apply_columns(&self.h, v)
    }
}

fn check_shape<K: Key, L: Key>(
    name: &str,
    cols: &Columns<K, L>,
    src: &BigradedModule<K>,
    dst: &BigradedModule<L>,
    shift: i64,
) -> Result<(), Error> {
    for (k, v) in cols {
        let b = src.bidegree(k).ok_or_else(|| Error::input(format!("/{name}"), format!("unknown source key {k}")))?;
        for l in v.keys() {
            if dst.bidegree(l) != Some(Bidegree::new(b.n, b.m + shift)) {
                return Err(Error::input(format!("/{name}"), format!("{name}({k}) has term {l} of the wrong bidegree")));
            }
        }
    }
    Ok(())
}

/// Checks that `η, ξ` are chain maps, `ηξ = 1`, `dh + hd = ξη − 1` and
/// the side conditions `ηh = 0`, `hξ = 0`, `hh = 0` on every basis element.
pub fn validate_sdr<KX: Key, KY: Key>(
    x: &BigradedModule<KX>,
    y: &BigradedModule<KY>,
    s: &SdrData<KX, KY>,
) -> Result<Report, Error> {
    check_shape("eta", &s.eta, x, y, 0)?;
    check_shape("xi", &s.xi, y, x, 0)?;
    check_shape("h", &s.h, x, x, 1)?;
    let mut r = Report::new();
    for k in y.keys() {
        let e = Vector::basis(k.clone());
        let xk = s.xi_of(&e);
        r.check("dξ = ξd", || k.to_string(), &(&xk.map_linear(|l| x.d(l)) - &s.xi_of(&y.d(k))));
        r.check("ηξ = 1", || k.to_string(), &(&s.eta_of(&xk) - &e));
        r.check("hξ = 0", || k.to_string(), &s.h_of(&xk));
    }
    for k in x.keys() {
        let e = Vector::basis(k.clone());
        r.check("dη = ηd", || k.to_string(), &(&s.eta_of(&e).map_linear(|l| y.d(l)) - &s.eta_of(&x.d(k))));
        let hk = s.h_of(&e);
        let mut v = &hk.map_linear(|l| x.d(l)) + &s.h_of(&x.d(k));
        v.axpy(&Scalar::from(-1), &s.xi_of(&s.eta_of(&e)));
        v.axpy(&Scalar::one(), &e);
        r.check("dh + hd = ξη − 1", || k.to_string(), &v);
        r.check("ηh = 0", || k.to_string(), &s.eta_of(&hk));
        r.check("hh = 0", || k.to_string(), &s.h_of(&hk));
    }
    Ok(r)
}
