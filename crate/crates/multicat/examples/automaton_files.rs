//! Writes automata in the plain-text format, parses them back, and checks
//! the round trip is exact.
//!
//! ```bash
//! cargo run -p multicat --example automaton_files
//! ```

use multicat::construct::{chain_catenate, equivalent};
use multicat::format::{parse_dfa, parse_nfa, write_dfa, write_nfa};
use multicat::witness::build_two_letter;

fn main() {
    let (first, second) = build_two_letter(3, 3).unwrap();

    let text = write_dfa(&first);
    println!("first component in text form:\n{text}");

    let reparsed = parse_dfa(&text).unwrap();
    assert_eq!(reparsed, first);
    assert!(equivalent(&reparsed, &first).unwrap());
    println!("round trip: exact");

    // the fused chain serializes as an NFA
    let (fused, _) = chain_catenate(&[first, second]).unwrap();
    let nfa_text = write_nfa(&fused);
    let reparsed = parse_nfa(&nfa_text).unwrap();
    assert_eq!(reparsed, fused);
    println!(
        "fused chain: {} states, {} text lines, round trip exact",
        fused.state_count(),
        nfa_text.lines().count()
    );

    // comments and blank lines are tolerated on input
    let commented = format!("# witness component\n\n{text}");
    assert_eq!(parse_dfa(&commented).unwrap(), parse_dfa(&text).unwrap());
    println!("comment lines ignored on parse");
}
