//! Parsing expressions, evaluating them and exchanging results as JSON.
//!
//! ```bash
//! cargo run --example expressions
//! ```

use uhsl2::expr;
use uhsl2::format::{from_json, pretty, to_json};

fn main() {
    for (src, cap) in [
        ("y * x - x * y", None),
        ("z * m(2,0,0,0)", None),
        ("1/2 * (x + y) * (x - y)", None),
        ("exp(z) * exp(x)", Some(2)),
    ] {
        let e = expr::parse(src).unwrap();
        let value = e.eval(cap).unwrap();
        println!("{e}\n  = {}", pretty(&value));

        let json = to_json(&value);
        assert_eq!(from_json(&json).unwrap(), value);
        println!("  {json}");
    }

    match expr::eval("exp(x)", None) {
        Err(err) => println!("without a cap: {err}"),
        Ok(_) => unreachable!(),
    }
}
