//! Catenation of automaton chains and the determinize/minimize pipeline.
//!
//! Catenation is epsilon-free: transitions of the left automaton that reach a
//! final state are augmented with the right automaton's initial states, and
//! the fused initial set picks up the right initials only when the left
//! automaton accepts the empty word. Determinization explores accessible
//! subsets only, and both determinization and minimization number their output
//! states in breadth-first discovery order (letters ascending), so equal
//! languages produce structurally identical minimal automata.

use crate::automata::{AutomatonError, Dfa, Nfa};
use crate::set::StateSet;
use std::collections::{HashMap, HashSet, VecDeque};

/// Placement of chain components inside the fused state space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLayout {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl ChainLayout {
    pub fn new(sizes: Vec<usize>) -> ChainLayout {
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut total = 0;
        offsets.push(0);
        for &n in &sizes {
            total += n;
            offsets.push(total);
        }
        ChainLayout { sizes, offsets }
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// First fused state of component `k`; `offset(component_count())` is the
    /// total state count.
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    pub fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }
}

/// A subset-construction state split into one subset per chain component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidSequence {
    parts: Vec<StateSet>,
}

impl ValidSequence {
    pub fn parts(&self) -> &[StateSet] {
        &self.parts
    }

    /// The first component holds exactly one state.
    pub fn head_is_singleton(&self) -> bool {
        self.parts.first().is_some_and(|part| part.len() == 1)
    }

    /// An empty component is never followed by a non-empty one.
    pub fn no_gap_after_empty(&self) -> bool {
        self.parts
            .windows(2)
            .all(|pair| !pair[0].is_empty() || pair[1].is_empty())
    }

    /// A component touching its final states forces the next component's
    /// initial state to be present.
    pub fn finals_trigger_next_initial(&self, components: &[Dfa]) -> bool {
        assert_eq!(self.parts.len(), components.len());
        for k in 0..self.parts.len().saturating_sub(1) {
            if self.parts[k].intersects(components[k].finals())
                && !self.parts[k + 1].contains(components[k + 1].initial())
            {
                return false;
            }
        }
        true
    }

    pub fn is_valid(&self, components: &[Dfa]) -> bool {
        self.head_is_singleton()
            && self.no_gap_after_empty()
            && self.finals_trigger_next_initial(components)
    }
}

/// Splits a flat subset of the fused space at the layout boundaries. No
/// validity check is performed here.
pub fn decode_state(subset: &StateSet, layout: &ChainLayout) -> ValidSequence {
    assert_eq!(subset.width(), layout.total(), "subset width mismatch");
    let parts = (0..layout.component_count())
        .map(|k| {
            let lo = layout.offset(k);
            let hi = layout.offset(k + 1);
            StateSet::from_states(
                hi - lo,
                subset.iter().filter(|&q| lo <= q && q < hi).map(|q| q - lo),
            )
        })
        .collect();
    ValidSequence { parts }
}

/// Epsilon-free catenation of two NFAs over the same alphabet.
pub fn catenate(a: &Nfa, b: &Nfa) -> Result<Nfa, AutomatonError> {
    if a.alphabet_size() != b.alphabet_size() {
        return Err(AutomatonError::AlphabetMismatch {
            left: a.alphabet_size(),
            right: b.alphabet_size(),
        });
    }
    let alphabet = a.alphabet_size();
    let offset = a.state_count();
    let total = a.state_count() + b.state_count();
    let b_initials = b.initials().embed(total, offset);

    let mut delta = Vec::with_capacity(total * alphabet);
    for state in 0..a.state_count() {
        for letter in 0..alphabet {
            let image = a.targets(state, letter);
            let mut fused = image.embed(total, 0);
            if image.intersects(a.finals()) {
                fused.union_with(&b_initials);
            }
            delta.push(fused);
        }
    }
    for state in 0..b.state_count() {
        for letter in 0..alphabet {
            delta.push(b.targets(state, letter).embed(total, offset));
        }
    }

    let mut initials = a.initials().embed(total, 0);
    if a.initials().intersects(a.finals()) {
        initials.union_with(&b_initials);
    }
    let finals = b.finals().embed(total, offset);
    Nfa::new(total, alphabet, initials, finals, delta)
}

/// Left-associated catenation of a DFA chain, plus the component layout.
pub fn chain_catenate(components: &[Dfa]) -> Result<(Nfa, ChainLayout), AutomatonError> {
    let first = components.first().ok_or(AutomatonError::EmptyChain)?;
    let mut fused = Nfa::from_dfa(first);
    for dfa in &components[1..] {
        fused = catenate(&fused, &Nfa::from_dfa(dfa))?;
    }
    let layout = ChainLayout::new(components.iter().map(Dfa::state_count).collect());
    Ok((fused, layout))
}

/// A determinized NFA together with the subset backing each DFA state.
#[derive(Debug, Clone)]
pub struct Determinized {
    pub dfa: Dfa,
    /// `subsets[q]` is the NFA subset interned as DFA state `q`.
    pub subsets: Vec<StateSet>,
}

/// Accessible-subset construction. State 0 is the initial subset; further
/// states are numbered in BFS discovery order with letters ascending.
pub fn subset_construction(nfa: &Nfa) -> Determinized {
    let alphabet = nfa.alphabet_size();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut delta: Vec<usize> = Vec::new();

    let initial = nfa.initials().clone();
    index.insert(initial.clone(), 0);
    subsets.push(initial);

    let mut head = 0;
    while head < subsets.len() {
        let current = subsets[head].clone();
        for letter in 0..alphabet {
            let successor = nfa.step_set(&current, letter);
            let fresh = subsets.len();
            let id = *index.entry(successor.clone()).or_insert(fresh);
            if id == fresh {
                subsets.push(successor);
            }
            delta.push(id);
        }
        head += 1;
    }

    let finals = StateSet::from_states(
        subsets.len(),
        subsets
            .iter()
            .enumerate()
            .filter(|(_, subset)| subset.intersects(nfa.finals()))
            .map(|(q, _)| q),
    );
    let dfa = Dfa::new(subsets.len(), alphabet, 0, finals, delta)
        .expect("subset construction yields a complete DFA");
    Determinized { dfa, subsets }
}

pub fn determinize(nfa: &Nfa) -> Dfa {
    subset_construction(nfa).dfa
}

/// Accessible part of `dfa`, renumbered in BFS order with letters ascending.
pub(crate) fn renumber_accessible(dfa: &Dfa) -> Dfa {
    let mut order = Vec::new();
    let mut new_id = vec![usize::MAX; dfa.state_count()];
    let mut queue = VecDeque::from([dfa.initial()]);
    new_id[dfa.initial()] = 0;
    order.push(dfa.initial());
    while let Some(state) = queue.pop_front() {
        for letter in 0..dfa.alphabet_size() {
            let target = dfa.step(state, letter);
            if new_id[target] == usize::MAX {
                new_id[target] = order.len();
                order.push(target);
                queue.push_back(target);
            }
        }
    }

    let count = order.len();
    let mut delta = Vec::with_capacity(count * dfa.alphabet_size());
    for &state in &order {
        for letter in 0..dfa.alphabet_size() {
            delta.push(new_id[dfa.step(state, letter)]);
        }
    }
    let finals = StateSet::from_states(
        count,
        order
            .iter()
            .enumerate()
            .filter(|(_, &q)| dfa.is_final(q))
            .map(|(i, _)| i),
    );
    Dfa::new(count, dfa.alphabet_size(), 0, finals, delta).expect("renumbering keeps completeness")
}

/// Moore partition refinement over the accessible part, with the quotient
/// renumbered canonically. Two minimal DFAs of the same language come out
/// structurally identical.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let acc = renumber_accessible(dfa);
    let n = acc.state_count();
    let alphabet = acc.alphabet_size();

    // initial partition: final vs non-final, block ids by first appearance
    let mut block = assign_by_key(n, |q| acc.is_final(q) as usize);
    let mut block_count = block.iter().max().copied().unwrap_or(0) + 1;

    loop {
        let next = assign_by_key(n, |q| {
            let mut signature = Vec::with_capacity(alphabet + 1);
            signature.push(block[q]);
            for letter in 0..alphabet {
                signature.push(block[acc.step(q, letter)]);
            }
            signature
        });
        let next_count = next.iter().max().copied().unwrap_or(0) + 1;
        if next_count == block_count {
            break;
        }
        block = next;
        block_count = next_count;
    }

    let mut delta = vec![usize::MAX; block_count * alphabet];
    let mut finals = StateSet::empty(block_count);
    for q in 0..n {
        let b = block[q];
        if delta[b * alphabet] == usize::MAX {
            for letter in 0..alphabet {
                delta[b * alphabet + letter] = block[acc.step(q, letter)];
            }
        }
        if acc.is_final(q) {
            finals.insert(b);
        }
    }
    let quotient = Dfa::new(block_count, alphabet, block[acc.initial()], finals, delta)
        .expect("quotient keeps completeness");
    renumber_accessible(&quotient)
}

fn assign_by_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    (0..n)
        .map(|q| {
            let fresh = ids.len();
            *ids.entry(key(q)).or_insert(fresh)
        })
        .collect()
}

/// Exact language equality, by BFS over the synchronized product. Fails fast
/// on the first state pair whose finality differs.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool, AutomatonError> {
    if a.alphabet_size() != b.alphabet_size() {
        return Err(AutomatonError::AlphabetMismatch {
            left: a.alphabet_size(),
            right: b.alphabet_size(),
        });
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([(a.initial(), b.initial())]);
    seen.insert((a.initial(), b.initial()));
    while let Some((p, q)) = queue.pop_front() {
        if a.is_final(p) != b.is_final(q) {
            return Ok(false);
        }
        for letter in 0..a.alphabet_size() {
            let pair = (a.step(p, letter), b.step(q, letter));
            if seen.insert(pair) {
                queue.push_back(pair);
            }
        }
    }
    Ok(true)
}

/// Full pipeline over a DFA chain: catenate, determinize, minimize.
#[derive(Debug, Clone)]
pub struct ChainAnalysis {
    pub layout: ChainLayout,
    pub fused: Nfa,
    pub determinized: Determinized,
    pub minimal: Dfa,
}

pub fn analyze_chain(components: &[Dfa]) -> Result<ChainAnalysis, AutomatonError> {
    let (fused, layout) = chain_catenate(components)?;
    let determinized = subset_construction(&fused);
    let minimal = minimize(&determinized.dfa);
    Ok(ChainAnalysis {
        layout,
        fused,
        determinized,
        minimal,
    })
}
