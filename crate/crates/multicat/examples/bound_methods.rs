//! Computes the exact state bound for a few size profiles by all three
//! routes and shows they agree.
//!
//! ```bash
//! cargo run -p multicat --example bound_methods
//! ```

use multicat::bounds::{brute_force_count, formula_count, recurrence_count, SizeProfile};

fn main() {
    println!("{:<12} {:>12} {:>12} {:>12}", "sizes", "brute", "recurrence", "formula");
    for sizes in [vec![2, 2], vec![3, 3], vec![4, 3], vec![3, 3, 3], vec![2, 3, 4, 2]] {
        let profile = SizeProfile::new(sizes).unwrap();
        let brute = brute_force_count(&profile).unwrap();
        let recurrence = recurrence_count(&profile);
        let formula = formula_count(&profile).unwrap();
        assert_eq!(brute, recurrence);
        assert_eq!(formula, recurrence);
        println!("{:<12} {:>12} {:>12} {:>12}", profile.to_string(), brute, recurrence, formula);
    }

    // the recurrence alone scales far past what enumeration can reach
    let large = SizeProfile::new(vec![6; 7]).unwrap();
    println!("\nbound for seven components of size 6: {}", recurrence_count(&large));
}
