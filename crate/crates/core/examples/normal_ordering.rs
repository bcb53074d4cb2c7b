//! Normal ordering of pure powers: `z^a y^b`, `y^a x^b` and `z^a x^b`.
//!
//! ```bash
//! cargo run --example normal_ordering
//! ```

use uhsl2::format::pretty;
use uhsl2::product::{normal_order_yx, normal_order_zx, normal_order_zy};
use uhsl2::{star, Color, Element, NormalMonomial};

fn main() {
    let p = |c, n| Element::monomial(NormalMonomial::power(c, n));

    println!("z^2/2! * y^2/2! = {}", pretty(&normal_order_zy(2, 2)));
    println!("y^2/2! * x/1!   = {}", pretty(&normal_order_yx(2, 1)));
    println!("z^2/2! * x^2/2! = {}", pretty(&normal_order_zx(2, 2)));

    // the general product agrees with the specialised formulas
    for (a, b) in [(3, 2), (1, 4), (5, 5)] {
        assert_eq!(star(&p(Color::Z, a), &p(Color::X, b)), normal_order_zx(a, b));
    }
}
