use super::{Bond, Element};

/// `None` until a bond has been written or inferred.
pub type BondSlot = Option<Bond>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    /// `@`
    Anticlockwise,
    /// `@@`
    Clockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BracketInfo {
    pub chirality: Option<Chirality>,
    pub hydrogens: u8,
    pub charge: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    /// Position among all atoms in document order.
    pub index: usize,
    pub element: Element,
    pub aromatic: bool,
    pub bracket: Option<BracketInfo>,
}

/// A ring-bond digit as written after an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingMark {
    pub digit: u16,
    /// Bond symbol written at this end, if any.
    pub written: Option<Bond>,
    /// Index into [`SmilesAst::rings`].
    pub closure: usize,
}

/// Both ends of a ring bond.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingClosure {
    pub digit: u16,
    pub open_atom: usize,
    pub close_atom: usize,
    pub bond: BondSlot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchedAtom {
    pub atom: Atom,
    pub rings: Vec<RingMark>,
    pub branches: Vec<Branch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub bond: BondSlot,
    pub chain: Chain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub head: BranchedAtom,
    pub tail: Vec<(BondSlot, BranchedAtom)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmilesAst {
    pub chain: Chain,
    pub rings: Vec<RingClosure>,
    pub atom_count: usize,
}

impl Chain {
    /// Calls `f` for every atom in document order.
    pub fn for_each_atom<'a>(&'a self, f: &mut dyn FnMut(&'a BranchedAtom)) {
        self.head.for_each_atom(f);
        for (_, b) in &self.tail {
            b.for_each_atom(f);
        }
    }
}

impl BranchedAtom {
    fn for_each_atom<'a>(&'a self, f: &mut dyn FnMut(&'a BranchedAtom)) {
        f(self);
        for branch in &self.branches {
            branch.chain.for_each_atom(f);
        }
    }
}

impl SmilesAst {
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::with_capacity(self.atom_count);
        self.chain.for_each_atom(&mut |b| out.push(&b.atom));
        out
    }
}
