use std::collections::BTreeMap;

use super::{DivisionError, DivisionKind};
use crate::ring::{DifferenceMonomial, ExponentVector};

#[derive(Clone, PartialEq, Eq, Debug)]
enum Node {
    Branch(BTreeMap<u32, Node>),
    Leaf {
        monomial: DifferenceMonomial,
        element: usize,
    },
}

impl Node {
    fn empty_branch() -> Self {
        Node::Branch(BTreeMap::new())
    }
}

/// Index of leading monomials for J-reductor search.
///
/// One trie per indeterminate; level `p` branches on the degree in
/// difference `difference_order[p]`, so every branch node is exactly one
/// group `[d_0, …, d_p]_k`. A lookup descends along the largest key not
/// exceeding the query degree, which is the only child whose cone can
/// contain the query. Leaves carry caller-chosen element ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JanetTree {
    kind: DivisionKind,
    difference_order: Vec<usize>,
    roots: BTreeMap<usize, Node>,
    len: usize,
}

impl JanetTree {
    pub fn new(difference_order: Vec<usize>, kind: DivisionKind) -> Self {
        Self {
            kind,
            difference_order,
            roots: BTreeMap::new(),
            len: 0,
        }
    }

    pub fn kind(&self) -> DivisionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn check_arity(&self, u: &DifferenceMonomial) -> Result<(), DivisionError> {
        if u.exponent().len() != self.difference_order.len() {
            return Err(DivisionError::MixedContexts(format!(
                "{u} does not have {} exponents",
                self.difference_order.len()
            )));
        }
        Ok(())
    }

    pub fn insert(&mut self, monomial: DifferenceMonomial, element: usize) -> Result<(), DivisionError> {
        self.check_arity(&monomial)?;
        let mut node = self
            .roots
            .entry(monomial.indeterminate())
            .or_insert_with(Node::empty_branch);
        let depth = self.difference_order.len();
        for (p, &i) in self.difference_order.iter().enumerate() {
            let Node::Branch(children) = node else {
                unreachable!("leaves only occur at full depth")
            };
            let key = monomial.degree_in(i);
            if p + 1 == depth {
                if children.contains_key(&key) {
                    return Err(DivisionError::DuplicateMonomial(monomial));
                }
                children.insert(key, Node::Leaf { monomial, element });
                self.len += 1;
                return Ok(());
            }
            node = children.entry(key).or_insert_with(Node::empty_branch);
        }
        unreachable!("a context has at least one difference")
    }

    /// Removes `monomial` and returns the element id stored for it.
    pub fn remove(&mut self, monomial: &DifferenceMonomial) -> Result<usize, DivisionError> {
        self.check_arity(monomial)?;
        let missing = || DivisionError::MissingMonomial(monomial.clone());
        let root = self.roots.get_mut(&monomial.indeterminate()).ok_or_else(missing)?;
        let element = remove_rec(root, monomial, &self.difference_order).ok_or_else(missing)?;
        if matches!(root, Node::Branch(c) if c.is_empty()) {
            self.roots.remove(&monomial.indeterminate());
        }
        self.len -= 1;
        Ok(element)
    }

    pub fn contains(&self, monomial: &DifferenceMonomial) -> bool {
        self.find(monomial)
            .is_some_and(|(_, gamma)| gamma.is_zero())
    }

    /// The unique `(element, γ)` whose cone contains `u`, if any.
    pub fn find(&self, u: &DifferenceMonomial) -> Option<(usize, ExponentVector)> {
        if u.exponent().len() != self.difference_order.len() {
            return None;
        }
        let mut node = self.roots.get(&u.indeterminate())?;
        for &i in &self.difference_order {
            let Node::Branch(children) = node else {
                unreachable!("leaves only occur at full depth")
            };
            let d = u.degree_in(i);
            let (&key, child) = children.range(..=d).next_back()?;
            if self.kind == DivisionKind::Janet && key != d {
                // only the maximal degree of a group is multiplicative
                let (&max, _) = children.last_key_value()?;
                if key != max {
                    return None;
                }
            }
            node = child;
        }
        match node {
            Node::Leaf { monomial, element } => Some((*element, monomial.divides(u)?)),
            Node::Branch(_) => unreachable!("full-depth nodes are leaves"),
        }
    }

    /// All stored `(monomial, element)` pairs.
    pub fn leaves(&self) -> Vec<(DifferenceMonomial, usize)> {
        fn walk(node: &Node, out: &mut Vec<(DifferenceMonomial, usize)>) {
            match node {
                Node::Leaf { monomial, element } => out.push((monomial.clone(), *element)),
                Node::Branch(children) => children.values().for_each(|c| walk(c, out)),
            }
        }
        let mut out = Vec::with_capacity(self.len);
        self.roots.values().for_each(|r| walk(r, &mut out));
        out
    }
}

fn remove_rec(node: &mut Node, u: &DifferenceMonomial, order: &[usize]) -> Option<usize> {
    let Node::Branch(children) = node else {
        return None;
    };
    let key = u.degree_in(order[0]);
    if order.len() == 1 {
        return match children.remove(&key)? {
            Node::Leaf { element, .. } => Some(element),
            Node::Branch(_) => unreachable!("full-depth nodes are leaves"),
        };
    }
    let child = children.get_mut(&key)?;
    let element = remove_rec(child, u, &order[1..])?;
    if matches!(child, Node::Branch(c) if c.is_empty()) {
        children.remove(&key);
    }
    Some(element)
}
