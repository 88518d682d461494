use std::collections::BTreeMap;
use std::fmt;

use coeff_core::{nullspace, sign, Error, Key, Ring, Scalar, Tensor, Vector};
use itertools::Itertools;
use simplicial_face_algebra::{FaceWord, QuadraticPresentation};

use crate::wedge::{hat, inversions, permutations, WedgeTuple};

/// A word `[x_1 | … | x_k]` in suspended generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenWord<L>(pub Vec<L>);

impl<L: fmt::Display> fmt::Display for GenWord<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join("|"))
    }
}

/// A basis of `(R^!)^{(k)}(s, t)` as vectors in `(SM)^{⊗k}(s, t)`, together
/// with the ambient word basis.
#[derive(Clone, Debug)]
pub struct DualComponent<L: Ord> {
    pub words: Vec<GenWord<L>>,
    pub basis: Vec<Vector<GenWord<L>>>,
}

impl<L: Key> DualComponent<L> {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Composable words of `k` generators from color `s` to color `t`.
fn words<L: Key>(p: &QuadraticPresentation<L>, k: usize, s: i64, t: i64) -> Vec<GenWord<L>> {
    let mut partial: Vec<(Vec<L>, i64)> = vec![(Vec::new(), s)];
    for _ in 0..k {
        partial = partial
            .into_iter()
            .flat_map(|(w, c)| {
                p.generators.iter().filter(move |g| g.s == c).map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(g.key.clone());
                    (w2, g.t)
                })
            })
            .collect();
    }
    partial.into_iter().filter(|(_, c)| *c == t).map(|(w, _)| GenWord(w)).collect()
}

/// `(R^!)^{(k)}(s,t) = ⋂_{i+2+j=k} (SM)^{⊗i} ⊗ S^{⊗2}Q ⊗ (SM)^{⊗j}`.
///
/// Each term of the intersection is cut out by the annihilator of `S^{⊗2}Q`
/// placed at positions `i, i+1`, so the intersection is the common kernel of
/// all those linear forms. `S ⊗ S` acts on `a ⊗ b` by the Koszul sign
/// `(-1)^{s_a - t_a + m_a}`.
pub fn koszul_dual_generic<L: Key>(
    p: &QuadraticPresentation<L>,
    k: usize,
    s: i64,
    t: i64,
    ring: Ring,
) -> Result<DualComponent<L>, Error> {
    ring.require_field()?;
    let ws = words(p, k, s, t);
    if k < 2 {
        let basis = ws.iter().map(|w| Vector::basis(w.clone())).collect();
        return Ok(DualComponent { words: ws, basis });
    }
    let colors = p.colors();
    // Annihilator of S⊗S Q inside each bicolored piece (M⊗M)(a, b).
    let mut annihilators: BTreeMap<(i64, i64), Vec<Vector<Tensor<L, L>>>> = BTreeMap::new();
    let mut pairs: BTreeMap<(i64, i64), Vec<Tensor<L, L>>> = BTreeMap::new();
    for g in &p.generators {
        for h in p.generators.iter().filter(|h| h.s == g.t) {
            pairs.entry((g.s, h.t)).or_default().push(Tensor(g.key.clone(), h.key.clone()));
        }
    }
    for (&(a, b), ps) in &pairs {
        let rels: Vec<Vector<Tensor<L, L>>> = p
            .relations
            .iter()
            .filter(|r| r.keys().next().is_some_and(|Tensor(x, y)| colors[x].0 == a && colors[y].1 == b))
            .map(|r| {
                r.iter()
                    .map(|(Tensor(x, y), c)| {
                        let (sx, tx, mx) = colors[x];
                        (Tensor(x.clone(), y.clone()), c * &Scalar::from(sign(sx - tx + mx)))
                    })
                    .collect()
            })
            .collect();
        // Forms φ on the pairs with φ(q) = 0 for every relation q.
        let images: Vec<Vector<usize>> =
            ps.iter().map(|pr| rels.iter().enumerate().map(|(qi, q)| (qi, q.coeff(pr))).collect()).collect();
        let forms = nullspace(&images, ring)?
            .into_iter()
            .map(|v| v.iter().map(|(j, c)| (ps[*j].clone(), c.clone())).collect())
            .collect();
        annihilators.insert((a, b), forms);
    }
    // images[w] lists the value of every positional form on the word w.
    let mut images: Vec<Vector<Constraint<L>>> = Vec::with_capacity(ws.len());
    for w in &ws {
        let mut v = Vector::zero();
        for pos in 0..k - 1 {
            let (x, y) = (&w.0[pos], &w.0[pos + 1]);
            let a = colors[x].0;
            let b = colors[y].1;
            let Some(forms) = annihilators.get(&(a, b)) else { continue };
            let outer = GenWord(w.0[..pos].iter().chain(&w.0[pos + 2..]).cloned().collect());
            for (form, f) in forms.iter().enumerate() {
                let c = f.coeff(&Tensor(x.clone(), y.clone()));
                v.add_term(Constraint { pos, form, outer: outer.clone() }, c);
            }
        }
        images.push(v);
    }
    let basis = nullspace(&images, ring)?
        .into_iter()
        .map(|v| v.iter().map(|(j, c)| (ws[*j].clone(), c.clone())).collect())
        .collect();
    Ok(DualComponent { words: ws, basis })
}

/// A positional linear form: annihilator `form` applied at `pos`, with the
/// letters outside the pair fixed to `outer`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Constraint<L> {
    pos: usize,
    form: usize,
    outer: GenWord<L>,
}

impl<L: fmt::Display> fmt::Display for Constraint<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}{}", self.form, self.pos, self.outer)
    }
}

/// `[∂_{i_1}] ∧ … ∧ [∂_{i_k}] = Σ_σ (-1)^{inv(σ)+1} [∂_{σ̂(i_1)}^{n-k+1} | … | ∂_{σ̂(i_k)}^n]`
/// as a vector in words of single-letter generators.
pub fn wedge_expansion(w: &WedgeTuple) -> Vector<GenWord<FaceWord>> {
    let k = w.k();
    let n = w.n();
    let mut v = Vector::zero();
    for sigma in permutations(k) {
        let permuted: Vec<i64> = sigma.iter().map(|&j| w.indices()[j]).collect();
        let h = hat(&sigma, w.indices());
        let letters = h
            .iter()
            .enumerate()
            .map(|(j, &i)| FaceWord::new(&[(i, n - (k - 1 - j) as i64)]).expect("hat index within ambient"))
            .collect();
        v.add_term(GenWord(letters), Scalar::from(sign(inversions(&permuted) as i64 + 1)));
    }
    v
}
