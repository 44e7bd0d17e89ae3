//! Prints the bound polynomials for small chain lengths and checks that the
//! composition-sum expansion reproduces the recurrence-built form exactly.
//!
//! ```bash
//! cargo run -p multicat --example polynomial_identities
//! ```

use multicat::bounds::{
    compositions, count_poly, count_poly_expanded, y_coeff_poly_by_compositions,
    y_coeff_poly_by_recurrence,
};

fn main() {
    for alpha in 1..=4 {
        println!("r[{alpha}] = {}", count_poly(alpha));
    }

    println!();
    for alpha in 2..=7 {
        let built = count_poly(alpha);
        let expanded = count_poly_expanded(alpha);
        assert_eq!(built, expanded);
        println!("alpha={alpha}: composition expansion identical to the recurrence form");
    }

    println!();
    for level in 1..=5 {
        assert_eq!(
            y_coeff_poly_by_recurrence(level),
            y_coeff_poly_by_compositions(level)
        );
    }
    println!("y-coefficient polynomials: recurrence and composition sum agree up to level 5");

    // the expansion sums over compositions with an odd last part
    let total = compositions(6).unwrap().count();
    let odd_last = compositions(6)
        .unwrap()
        .filter(|c| c.last_part() % 2 == 1)
        .count();
    println!("compositions of 6: {total} total, {odd_last} with an odd last part");
}
