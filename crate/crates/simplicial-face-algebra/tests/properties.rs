use std::collections::BTreeSet;

use simplicial_face_algebra::{build_presentation, normal_words, normalize_word, rewrite_steps, FaceWord};

fn binom(n: i64, k: i64) -> usize {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

/// All composable words of length `k` ending at ambient `n`.
fn all_words(k: usize, n: i64) -> Vec<FaceWord> {
    let mut words = vec![Vec::<i64>::new()];
    for pos in 0..k {
        let amb = n - (k - 1 - pos) as i64;
        words = words.into_iter().flat_map(|w| (0..=amb).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    words.into_iter().map(|w| FaceWord::from_indices(n, &w).unwrap()).collect()
}

fn reachable_normal_forms(w: &FaceWord, depth: usize) -> BTreeSet<FaceWord> {
    assert!(depth < 64, "rewriting did not terminate");
    let next = rewrite_steps(w);
    if next.is_empty() {
        return [w.clone()].into();
    }
    next.iter().flat_map(|v| reachable_normal_forms(v, depth + 1)).collect()
}

#[test]
fn rewriting_is_confluent() {
    for n in 1..=6 {
        for k in 1..=4.min(n as usize) {
            for w in all_words(k, n) {
                let forms = reachable_normal_forms(&w, 0);
                assert_eq!(forms.len(), 1, "{w}");
                assert_eq!(forms.into_iter().next().unwrap(), normalize_word(&w));
            }
        }
    }
}

#[test]
fn normal_word_counts_are_binomial() {
    for n in 0..=6 {
        for k in 0..=n {
            let nw = normal_words(k as usize, n);
            assert_eq!(nw.len(), binom(n + 1, k), "k={k} n={n}");
            assert!(nw.iter().all(FaceWord::is_normal));
            if k > 0 {
                let images: BTreeSet<FaceWord> = all_words(k as usize, n).iter().map(normalize_word).collect();
                assert_eq!(images, nw.iter().cloned().collect());
            }
        }
    }
}

#[test]
fn relation_ranks_are_binomial() {
    let p = build_presentation(5);
    for n in 2..=5 {
        let count = p
            .relations
            .iter()
            .filter(|r| r.keys().next().unwrap().1.colors().1 == n)
            .count();
        assert_eq!(count, binom(n + 1, 2));
    }
}
