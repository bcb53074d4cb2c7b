//! Truncated products of exponential series.
//!
//! ```bash
//! cargo run --example exponentials
//! ```

use uhsl2::format::pretty;
use uhsl2::{exp_series, star, Color};

fn main() {
    let cap = 3;
    for (l, r) in [(Color::Y, Color::X), (Color::Z, Color::Y), (Color::Z, Color::X)] {
        let p = star(&exp_series(l, cap), &exp_series(r, cap));
        println!("e^{l} * e^{r} =\n  {}\n", pretty(&p));
    }
}
