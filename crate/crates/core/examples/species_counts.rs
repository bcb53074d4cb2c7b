//! Signed counts of structures of a product of species, compared with the
//! algebra.
//!
//! ```bash
//! cargo run --example species_counts
//! ```

use uhsl2::species::{ascending_maps_count, species_coefficient_check, star_species, ColoredSizes, FunctorSpec};
use uhsl2::Color;

fn main() {
    let y = FunctorSpec::Singleton(Color::Y);
    let x = FunctorSpec::Singleton(Color::X);
    for s in [ColoredSizes::new(1, 1, 0, 0), ColoredSizes::new(1, 0, 0, 1)] {
        println!("|Y * X| on {s:?} = {}", star_species(&y, &x, s));
    }

    let z2: FunctorSpec = "m(0,0,2,0)".parse().unwrap();
    let x2: FunctorSpec = "m(2,0,0,0)".parse().unwrap();
    println!("|Z^2/2! * X^2/2!| on sizes (0,1,0,3) = {}", star_species(&z2, &x2, ColoredSizes::new(0, 1, 0, 3)));

    println!("ascending maps, base 3, 4 points, 2 marked: {}", ascending_maps_count(3, 4, 2));

    let report = species_coefficient_check(&FunctorSpec::Exponential(Color::Z), &FunctorSpec::Exponential(Color::X), 5);
    println!("E^Z * E^X: {} size tuples checked, {} mismatches", report.checked, report.mismatches.len());
}
