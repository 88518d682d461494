use coeff_core::{Scalar, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AInfAlgebra;

fn s(x: &str) -> String {
    x.to_string()
}

/// `x` in degree 1, `y` in degree 2, `d = 0`, `π_0(x⊗x) = y`, all else zero.
pub fn xy_example() -> AInfAlgebra {
    AInfAlgebra::new(vec![(s("x"), 1), (s("y"), 2)], vec![], vec![(0, vec![s("x"), s("x")], Vector::basis(s("y")))])
        .expect("example is well formed")
}

/// `x K[x] / (x^top)` with `x` in degree `deg`, `d = 0` and `π_0` the
/// product; generators `x`, `x2`, …, `x{top-1}`.
pub fn truncated_polynomial(deg: i64, top: usize) -> AInfAlgebra {
    let name = |i: usize| if i == 1 { s("x") } else { format!("x{i}") };
    let gens = (1..top).map(|i| (name(i), deg * i as i64)).collect();
    let mut pi = Vec::new();
    for i in 1..top {
        for j in 1..top {
            if i + j < top {
                pi.push((0, vec![name(i), name(j)], Vector::basis(name(i + j))));
            }
        }
    }
    AInfAlgebra::new(gens, vec![], pi).expect("example is well formed")
}

/// A random A∞-algebra whose Stasheff relations hold for structural
/// reasons: inputs `u{i}` feed every `π_n`, whose values lie in outputs
/// `v{…}` that no operation accepts, so all double composites vanish;
/// acyclic pairs `b{i} ↦ a{i}` carry the differential and are killed by
/// every `π_n`. Arities up to `max_n + 2`, degrees at least 1.
pub fn random_ainf(seed: u64, max_n: usize) -> AInfAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<(String, i64)> = (0..rng.gen_range(1..=2)).map(|i| (format!("u{i}"), rng.gen_range(1..=2))).collect();
    let mut gens = inputs.clone();
    let mut outputs: Vec<(String, i64)> = Vec::new();
    let mut pi = Vec::new();
    for n in 0..=max_n {
        for _ in 0..rng.gen_range(0..=2) {
            let args: Vec<&(String, i64)> = (0..n + 2).map(|_| &inputs[rng.gen_range(0..inputs.len())]).collect();
            let deg = n as i64 + args.iter().map(|(_, d)| d).sum::<i64>();
            let out = match outputs.iter().find(|(_, d)| *d == deg) {
                Some((g, _)) if rng.gen_bool(0.5) => g.clone(),
                _ => {
                    let g = format!("v{}", outputs.len());
                    outputs.push((g.clone(), deg));
                    g
                }
            };
            let c = Scalar::from(if rng.gen_bool(0.5) { 1 } else { -1 });
            pi.push((n, args.into_iter().map(|(g, _)| g.clone()).collect(), Vector::term(out, c)));
        }
    }
    gens.extend(outputs);
    let mut d = Vec::new();
    for i in 0..rng.gen_range(0..=1) {
        let deg = rng.gen_range(1..=2);
        gens.push((format!("a{i}"), deg));
        gens.push((format!("b{i}"), deg + 1));
        d.push((format!("b{i}"), Vector::basis(format!("a{i}"))));
    }
    AInfAlgebra::new(gens, d, pi).expect("random algebra is well formed")
}
