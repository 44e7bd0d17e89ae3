#![allow(dead_code)]

use multicat::{Dfa, StateSet};
use rand::rngs::StdRng;
use rand::Rng;

/// Uniform random complete DFA with up to `max_states` states.
pub fn random_dfa(rng: &mut StdRng, max_states: usize, alphabet: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let delta = (0..n * alphabet).map(|_| rng.gen_range(0..n)).collect();
    let finals = StateSet::from_states(n, (0..n).filter(|_| rng.gen_bool(0.4)));
    Dfa::new(n, alphabet, rng.gen_range(0..n), finals, delta).unwrap()
}

/// Every word over `alphabet` letters of length at most `max_len`, shortest
/// first.
pub fn words_up_to(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &layer {
            for letter in 0..alphabet {
                let mut w = word.clone();
                w.push(letter);
                next.push(w);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}
