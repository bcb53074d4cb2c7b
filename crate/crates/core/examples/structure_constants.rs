//! Structural coefficients of the divided-power basis.
//!
//! ```bash
//! cargo run --example structure_constants
//! ```

use uhsl2::format::{pretty, pretty_monomial};
use uhsl2::product::ProductIndexAssignment;
use uhsl2::{mono_star_mono, structural_coefficient, NormalMonomial};

fn main() {
    let z2 = NormalMonomial::new(0, 0, 2, 0);
    let x2 = NormalMonomial::new(2, 0, 0, 0);
    println!("z^2/2! * x^2/2! = {}", pretty(&mono_star_mono(z2, x2)));

    let c = structural_coefficient(z2, x2, NormalMonomial::new(0, 1, 0, 3)).unwrap();
    println!("coefficient of y h^3/3!: {c}");

    // the nonzero summands behind one product
    let m1 = NormalMonomial::new(1, 1, 1, 0);
    let m2 = NormalMonomial::new(1, 1, 0, 0);
    println!("\nsummands of ({}) * ({}):", pretty_monomial(&m1), pretty_monomial(&m2));
    for t in ProductIndexAssignment::enumerate(m1, m2).filter(|t| t.summand() != 0.into()) {
        println!("  {:>4}  {}", t.summand(), pretty_monomial(&t.output()));
    }
    println!("total: {}", pretty(&mono_star_mono(m1, m2)));
}
