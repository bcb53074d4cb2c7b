//! Normal forms by rewriting words with the defining relations.
//!
//! ```bash
//! cargo run --example rewriting
//! ```

use uhsl2::rewrite::{normalize, normalize_with, oracle_star, rewrite_step, FreeWord, Strategy};
use uhsl2::{mono_star_mono, NormalMonomial};

fn main() {
    let w = FreeWord::parse("ZXX").unwrap();
    let mut current = w.clone();
    while let Some(next) = rewrite_step(&current) {
        println!("{current} -> {}", display(&next));
        // follow the first word that is still out of order
        match next.terms().map(|(w, _)| w).find(|w| !w.is_normal()) {
            Some(w) => current = w.clone(),
            None => break,
        }
    }
    let leftmost = normalize(&w);
    assert_eq!(leftmost, normalize_with(&w, Strategy::Rightmost));
    println!("ZXX = {}", display(&leftmost));

    let (z, x2) = (NormalMonomial::new(0, 0, 1, 0), NormalMonomial::new(2, 0, 0, 0));
    assert_eq!(oracle_star(z, x2), mono_star_mono(z, x2));
    println!("rewriting agrees with the closed formula on z * x^2/2!");
}

fn display(s: &uhsl2::rewrite::WordSum) -> String {
    s.terms().map(|(w, c)| format!("{c}·{w}")).collect::<Vec<_>>().join(" + ")
}
