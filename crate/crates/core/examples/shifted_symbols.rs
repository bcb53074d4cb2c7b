//! The shifted elementary symbol `(a)^s_n = e^s(a, a+1, ..., a+n-1)` and the
//! Pochhammer k-symbol.
//!
//! ```bash
//! cargo run --example shifted_symbols
//! ```

use num_bigint::BigInt;
use uhsl2::combinatorics::{falling_factorial, pochhammer_k, shifted_elem, tableaux_count_oracle, vam3_lhs, vam3_rhs};

fn main() {
    println!("(a)^3_4 for a = 0..5:");
    for a in 0..=5i64 {
        println!("  a = {a}: {}", shifted_elem(a, 3, 4));
    }

    // counted by tableaux on an n-column board shifted by a
    let (a, s, n) = (2, 3, 5);
    println!("(2)^3_5 = {} and tableaux count = {}", shifted_elem(a as i64, s, n), tableaux_count_oracle(a, s, n));

    println!("(7)_3 = {}, (7)_(3,-1) = {}", falling_factorial(7, 3), pochhammer_k(&BigInt::from(7), 3, &BigInt::from(-1)));

    println!("(y + (2-n)h)_(n,-h), expanded:");
    for n in 0..=3 {
        let lhs = vam3_lhs(3, n);
        assert_eq!(lhs, vam3_rhs(3, n));
        println!("  n = {n}: {lhs}");
    }
}
