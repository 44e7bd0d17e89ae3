//! Finite automata over dense integer states and letters.
//!
//! States are `0..state_count` and letters are `0..alphabet_size`; named
//! letters exist only at the CLI/file-format layer. All automata are complete:
//! a [`Dfa`] has exactly one successor per (state, letter) and an [`Nfa`] has
//! at least one.

use crate::set::StateSet;
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("state {index} out of range for size {size}")]
    StateOutOfRange { index: usize, size: usize },
    #[error("letter {letter} out of range for alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: usize, alphabet_size: usize },
    #[error("transposition and contraction need two distinct states")]
    IdenticalStatePair,
    #[error("transformation size {got} does not match automaton size {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("automaton needs at least one state and one letter")]
    EmptyAutomaton,
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("missing transition for state {state} on letter {letter}")]
    MissingTransition { state: usize, letter: usize },
    #[error("duplicate transition for state {state} on letter {letter}")]
    DuplicateTransition { state: usize, letter: usize },
    #[error("cannot catenate an empty sequence of automata")]
    EmptyChain,
}

/// How a [`Transformation`] was built; kept for pretty-printing only, the
/// image table is always authoritative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Cycle,
    Rotation(usize),
    Transposition(usize, usize),
    Contraction(usize, usize),
    Identity,
    Explicit,
}

/// A total self-map on `{0..n-1}`, stored as a full image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    kind: TransformKind,
    images: Vec<usize>,
}

impl Transformation {
    /// The cycle `(0, 1, ..., n-1)`: maps `k` to `(k + 1) mod n`.
    pub fn cycle(n: usize) -> Result<Self, AutomatonError> {
        if n == 0 {
            return Err(AutomatonError::EmptyAutomaton);
        }
        Ok(Transformation {
            kind: TransformKind::Cycle,
            images: (0..n).map(|k| (k + 1) % n).collect(),
        })
    }

    /// The cycle composed with itself `k` times: maps `j` to `(j + k) mod n`.
    pub fn rotation(n: usize, k: usize) -> Result<Self, AutomatonError> {
        if n == 0 {
            return Err(AutomatonError::EmptyAutomaton);
        }
        Ok(Transformation {
            kind: TransformKind::Rotation(k % n),
            images: (0..n).map(|j| (j + k) % n).collect(),
        })
    }

    /// Swaps `i` and `j`, fixes everything else.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, AutomatonError> {
        check_state(i, n)?;
        check_state(j, n)?;
        if i == j {
            return Err(AutomatonError::IdenticalStatePair);
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Transformation {
            kind: TransformKind::Transposition(i, j),
            images,
        })
    }

    /// Sends `from` onto `to`, fixes everything else.
    pub fn contraction(n: usize, from: usize, to: usize) -> Result<Self, AutomatonError> {
        check_state(from, n)?;
        check_state(to, n)?;
        if from == to {
            return Err(AutomatonError::IdenticalStatePair);
        }
        let mut images: Vec<usize> = (0..n).collect();
        images[from] = to;
        Ok(Transformation {
            kind: TransformKind::Contraction(from, to),
            images,
        })
    }

    pub fn identity(n: usize) -> Result<Self, AutomatonError> {
        if n == 0 {
            return Err(AutomatonError::EmptyAutomaton);
        }
        Ok(Transformation {
            kind: TransformKind::Identity,
            images: (0..n).collect(),
        })
    }

    pub fn explicit(images: Vec<usize>) -> Result<Self, AutomatonError> {
        if images.is_empty() {
            return Err(AutomatonError::EmptyAutomaton);
        }
        let n = images.len();
        for &image in &images {
            check_state(image, n)?;
        }
        Ok(Transformation {
            kind: TransformKind::Explicit,
            images,
        })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, state: usize) -> usize {
        self.images[state]
    }

    /// True when the image table is a bijection.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &image in &self.images {
            if seen[image] {
                return false;
            }
            seen[image] = true;
        }
        true
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TransformKind::Cycle => write!(f, "cycle"),
            TransformKind::Rotation(k) => write!(f, "rotation({k})"),
            TransformKind::Transposition(i, j) => write!(f, "transposition({i},{j})"),
            TransformKind::Contraction(i, j) => write!(f, "contraction({i}->{j})"),
            TransformKind::Identity => write!(f, "identity"),
            TransformKind::Explicit => write!(f, "{:?}", self.images),
        }
    }
}

fn check_state(index: usize, size: usize) -> Result<(), AutomatonError> {
    if index >= size {
        Err(AutomatonError::StateOutOfRange { index, size })
    } else {
        Ok(())
    }
}

fn check_letter(letter: usize, alphabet_size: usize) -> Result<(), AutomatonError> {
    if letter >= alphabet_size {
        Err(AutomatonError::LetterOutOfRange {
            letter,
            alphabet_size,
        })
    } else {
        Ok(())
    }
}

/// A complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    state_count: usize,
    alphabet_size: usize,
    initial: usize,
    finals: StateSet,
    /// Row-major transition table: `delta[state * alphabet_size + letter]`.
    delta: Vec<usize>,
}

impl Dfa {
    pub fn new(
        state_count: usize,
        alphabet_size: usize,
        initial: usize,
        finals: StateSet,
        delta: Vec<usize>,
    ) -> Result<Self, AutomatonError> {
        if state_count == 0 || alphabet_size == 0 {
            return Err(AutomatonError::EmptyAutomaton);
        }
        check_state(initial, state_count)?;
        assert_eq!(finals.width(), state_count, "finals width mismatch");
        if delta.len() != state_count * alphabet_size {
            return Err(AutomatonError::MissingTransition {
                state: delta.len() / alphabet_size,
                letter: delta.len() % alphabet_size,
            });
        }
        for &target in &delta {
            check_state(target, state_count)?;
        }
        Ok(Dfa {
            state_count,
            alphabet_size,
            initial,
            finals,
            delta,
        })
    }

    /// Builds a DFA whose letter `a` acts as `letter_actions[a]` on the states.
    pub fn from_transformations(
        state_count: usize,
        letter_actions: &[Transformation],
        initial: usize,
        finals: StateSet,
    ) -> Result<Self, AutomatonError> {
        if letter_actions.is_empty() {
            return Err(AutomatonError::EmptyAutomaton);
        }
        for action in letter_actions {
            if action.size() != state_count {
                return Err(AutomatonError::SizeMismatch {
                    expected: state_count,
                    got: action.size(),
                });
            }
        }
        let alphabet_size = letter_actions.len();
        let mut delta = Vec::with_capacity(state_count * alphabet_size);
        for state in 0..state_count {
            for action in letter_actions {
                delta.push(action.apply(state));
            }
        }
        Dfa::new(state_count, alphabet_size, initial, finals, delta)
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(state)
    }

    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.alphabet_size + letter]
    }

    /// Runs `word` from the initial state; the empty word stays put.
    pub fn run_word(&self, word: &[usize]) -> Result<usize, AutomatonError> {
        let mut state = self.initial;
        for &letter in word {
            check_letter(letter, self.alphabet_size)?;
            state = self.step(state, letter);
        }
        Ok(state)
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool, AutomatonError> {
        Ok(self.is_final(self.run_word(word)?))
    }

    /// States reachable from the initial state, by breadth-first closure.
    pub fn accessible_states(&self) -> StateSet {
        let mut seen = StateSet::singleton(self.state_count, self.initial);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(state) = queue.pop_front() {
            for letter in 0..self.alphabet_size {
                let target = self.step(state, letter);
                if !seen.contains(target) {
                    seen.insert(target);
                    queue.push_back(target);
                }
            }
        }
        seen
    }
}

/// A complete nondeterministic finite automaton (no epsilon transitions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    alphabet_size: usize,
    initials: StateSet,
    finals: StateSet,
    /// Row-major: `delta[state * alphabet_size + letter]` is the target set.
    delta: Vec<StateSet>,
}

impl Nfa {
    pub fn new(
        state_count: usize,
        alphabet_size: usize,
        initials: StateSet,
        finals: StateSet,
        delta: Vec<StateSet>,
    ) -> Result<Self, AutomatonError> {
        if state_count == 0 || alphabet_size == 0 {
            return Err(AutomatonError::EmptyAutomaton);
        }
        assert_eq!(initials.width(), state_count, "initials width mismatch");
        assert_eq!(finals.width(), state_count, "finals width mismatch");
        assert!(
            delta.iter().all(|set| set.width() == state_count),
            "delta width mismatch"
        );
        if delta.len() != state_count * alphabet_size {
            return Err(AutomatonError::MissingTransition {
                state: delta.len() / alphabet_size,
                letter: delta.len() % alphabet_size,
            });
        }
        for (i, targets) in delta.iter().enumerate() {
            if targets.is_empty() {
                return Err(AutomatonError::MissingTransition {
                    state: i / alphabet_size,
                    letter: i % alphabet_size,
                });
            }
        }
        Ok(Nfa {
            state_count,
            alphabet_size,
            initials,
            finals,
            delta,
        })
    }

    pub fn from_dfa(dfa: &Dfa) -> Nfa {
        let n = dfa.state_count();
        let delta = (0..n)
            .flat_map(|state| {
                (0..dfa.alphabet_size())
                    .map(move |letter| StateSet::singleton(n, dfa.step(state, letter)))
            })
            .collect();
        Nfa {
            state_count: n,
            alphabet_size: dfa.alphabet_size(),
            initials: StateSet::singleton(n, dfa.initial()),
            finals: dfa.finals().clone(),
            delta,
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn initials(&self) -> &StateSet {
        &self.initials
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    pub fn targets(&self, state: usize, letter: usize) -> &StateSet {
        &self.delta[state * self.alphabet_size + letter]
    }

    /// Union of the letter images of every state in `set`.
    pub fn step_set(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::empty(self.state_count);
        for state in set.iter() {
            out.union_with(self.targets(state, letter));
        }
        out
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool, AutomatonError> {
        let mut current = self.initials.clone();
        for &letter in word {
            check_letter(letter, self.alphabet_size)?;
            current = self.step_set(&current, letter);
        }
        Ok(current.intersects(&self.finals))
    }

    pub fn accessible_states(&self) -> StateSet {
        let mut seen = self.initials.clone();
        let mut queue: VecDeque<usize> = self.initials.iter().collect();
        while let Some(state) = queue.pop_front() {
            for letter in 0..self.alphabet_size {
                for target in self.targets(state, letter).iter() {
                    if !seen.contains(target) {
                        seen.insert(target);
                        queue.push_back(target);
                    }
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Four-letter automaton on `n` states: letter 0 cycles, 1 swaps the two
    /// first states, 2 contracts state 1 onto 0, 3 is the identity; initial 0,
    /// single final `n - 1`.
    fn four_letter(n: usize) -> Dfa {
        let actions = [
            Transformation::cycle(n).unwrap(),
            Transformation::transposition(n, 0, 1).unwrap(),
            Transformation::contraction(n, 1, 0).unwrap(),
            Transformation::identity(n).unwrap(),
        ];
        Dfa::from_transformations(n, &actions, 0, StateSet::singleton(n, n - 1)).unwrap()
    }

    #[test]
    fn transformation_tables() {
        assert_eq!(Transformation::cycle(4).unwrap().images(), &[1, 2, 3, 0]);
        assert_eq!(
            Transformation::transposition(4, 0, 1).unwrap().images(),
            &[1, 0, 2, 3]
        );
        assert_eq!(
            Transformation::contraction(4, 1, 0).unwrap().images(),
            &[0, 0, 2, 3]
        );
        assert_eq!(
            Transformation::rotation(5, 2).unwrap().images(),
            &[2, 3, 4, 0, 1]
        );
        assert_eq!(Transformation::identity(3).unwrap().images(), &[0, 1, 2]);
    }

    #[test]
    fn transformation_errors() {
        assert_eq!(
            Transformation::transposition(4, 2, 2),
            Err(AutomatonError::IdenticalStatePair)
        );
        assert_eq!(
            Transformation::contraction(4, 1, 1),
            Err(AutomatonError::IdenticalStatePair)
        );
        assert!(matches!(
            Transformation::transposition(3, 0, 5),
            Err(AutomatonError::StateOutOfRange { .. })
        ));
        assert!(matches!(
            Transformation::explicit(vec![0, 3]),
            Err(AutomatonError::StateOutOfRange { .. })
        ));
    }

    #[test]
    fn rotation_is_iterated_cycle() {
        for n in 1..=8 {
            let cycle = Transformation::cycle(n).unwrap();
            for k in 0..=n {
                let rot = Transformation::rotation(n, k).unwrap();
                for state in 0..n {
                    let mut expected = state;
                    for _ in 0..k {
                        expected = cycle.apply(expected);
                    }
                    assert_eq!(rot.apply(state), expected);
                }
            }
        }
    }

    #[test]
    fn permutations_are_bijections() {
        for n in 2..=6 {
            assert!(Transformation::cycle(n).unwrap().is_permutation());
            assert!(Transformation::rotation(n, 3).unwrap().is_permutation());
            assert!(Transformation::transposition(n, 0, 1)
                .unwrap()
                .is_permutation());
            assert!(Transformation::identity(n).unwrap().is_permutation());
            assert!(!Transformation::contraction(n, 1, 0)
                .unwrap()
                .is_permutation());
        }
    }

    #[test]
    fn run_word_traces() {
        let w3 = four_letter(3);
        // 0 -a-> 1 -a-> 2 -b-> 2
        assert_eq!(w3.run_word(&[0, 0, 1]).unwrap(), 2);
        assert_eq!(w3.run_word(&[]).unwrap(), 0);
        assert_eq!(w3.run_word(&[2]).unwrap(), 0);
        assert!(matches!(
            w3.run_word(&[4]),
            Err(AutomatonError::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn cycle_only_acceptance() {
        let actions = [Transformation::cycle(4).unwrap()];
        let dfa =
            Dfa::from_transformations(4, &actions, 0, StateSet::singleton(4, 3)).unwrap();
        assert!(dfa.accepts(&[0, 0, 0]).unwrap());
        assert!(!dfa.accepts(&[0, 0]).unwrap());
    }

    #[test]
    fn degenerate_single_state() {
        let actions = [Transformation::identity(1).unwrap()];
        let dfa =
            Dfa::from_transformations(1, &actions, 0, StateSet::singleton(1, 0)).unwrap();
        assert!(dfa.accepts(&[]).unwrap());
        assert!(dfa.accepts(&[0, 0]).unwrap());
    }

    #[test]
    fn transformation_size_mismatch() {
        let actions = [Transformation::cycle(3).unwrap()];
        assert!(matches!(
            Dfa::from_transformations(4, &actions, 0, StateSet::empty(4)),
            Err(AutomatonError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn accessible_states_cover() {
        let w4 = four_letter(4);
        assert_eq!(w4.accessible_states().len(), 4);

        // every letter loops back to the initial state
        let constant = Dfa::new(
            3,
            2,
            0,
            StateSet::empty(3),
            vec![0, 0, 0, 0, 0, 0],
        )
        .unwrap();
        assert_eq!(
            constant.accessible_states().iter().collect::<Vec<_>>(),
            vec![0]
        );
    }

    #[test]
    fn nfa_accessible_from_multiple_initials() {
        let n = 3;
        let loops = |q: usize| StateSet::singleton(n, q);
        // states 0 and 2 loop on themselves, state 1 unreachable
        let delta = vec![loops(0), loops(1), loops(2)];
        let nfa = Nfa::new(
            n,
            1,
            StateSet::from_states(n, [0, 2]),
            StateSet::empty(n),
            delta,
        )
        .unwrap();
        assert_eq!(nfa.accessible_states().iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn nfa_rejects_incomplete() {
        let delta = vec![StateSet::empty(2), StateSet::singleton(2, 1)];
        assert!(matches!(
            Nfa::new(
                2,
                1,
                StateSet::singleton(2, 0),
                StateSet::empty(2),
                delta
            ),
            Err(AutomatonError::MissingTransition { state: 0, letter: 0 })
        ));
    }

    fn random_dfa(rng: &mut StdRng, max_states: usize, alphabet: usize) -> Dfa {
        let n = rng.gen_range(1..=max_states);
        let delta = (0..n * alphabet).map(|_| rng.gen_range(0..n)).collect();
        let finals = StateSet::from_states(n, (0..n).filter(|_| rng.gen_bool(0.4)));
        Dfa::new(n, alphabet, rng.gen_range(0..n), finals, delta).unwrap()
    }

    #[test]
    fn run_word_splits_at_any_point() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let dfa = random_dfa(&mut rng, 6, 2);
            let len = rng.gen_range(0..=12);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let full = dfa.run_word(&word).unwrap();
            for cut in 0..=word.len() {
                let mut state = dfa.run_word(&word[..cut]).unwrap();
                for &letter in &word[cut..] {
                    state = dfa.step(state, letter);
                }
                assert_eq!(state, full);
            }
        }
    }
}
