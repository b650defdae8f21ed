//! Recursive-descent parser for the supported SMILES subset.
//!
//! ```text
//! chain     := branched (bond? branched)*
//! branched  := atom ring* branch*
//! ring      := bond? (digit | '%' digit digit)
//! branch    := '(' bond? chain ')'
//! atom      := organic | aromatic | '[' bracket ']'
//! ```

use std::collections::BTreeMap;

use super::ast::{
    Atom, BracketInfo, Branch, BranchedAtom, Chain, Chirality, RingClosure, RingMark, SmilesAst,
};
use super::{Bond, Element, SmilesError};

pub fn parse_smiles(text: &str) -> Result<SmilesAst, SmilesError> {
    if let Some((position, found)) = text.char_indices().find(|(_, c)| !c.is_ascii_graphic()) {
        return Err(SmilesError::UnexpectedCharacter { found, position });
    }
    if text.is_empty() {
        return Err(SmilesError::Empty);
    }
    let mut parser = Parser {
        s: text.as_bytes(),
        pos: 0,
        atoms: 0,
        rings: Vec::new(),
        open: BTreeMap::new(),
    };
    let chain = parser.chain()?;
    if let Some(c) = parser.peek() {
        return Err(match c {
            b')' => SmilesError::UnbalancedParenthesis {
                position: parser.pos,
            },
            b'.' => SmilesError::Unsupported {
                what: "a multi-component '.'",
                position: parser.pos,
            },
            _ => parser.unexpected(),
        });
    }
    if let Some((&digit, _)) = parser.open.iter().next() {
        return Err(SmilesError::UnmatchedRing { digit });
    }
    Ok(SmilesAst {
        chain,
        rings: parser.rings,
        atom_count: parser.atoms,
    })
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    atoms: usize,
    rings: Vec<RingClosure>,
    // open ring digit -> index into `rings`
    open: BTreeMap<u16, usize>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.s.get(self.pos + offset).copied()
    }

    fn unexpected(&self) -> SmilesError {
        match self.peek() {
            Some(c) => SmilesError::UnexpectedCharacter {
                found: c as char,
                position: self.pos,
            },
            None => SmilesError::UnexpectedCharacter {
                found: '\0',
                position: self.pos,
            },
        }
    }

    fn at_atom(&self) -> bool {
        matches!(self.peek(), Some(c) if c == b'[' || c == b'*' || c.is_ascii_alphabetic())
    }

    fn bond_symbol(&self) -> Option<Bond> {
        match self.peek()? {
            c @ (b'-' | b'=' | b'#' | b':') => Bond::from_symbol(c as char),
            _ => None,
        }
    }

    fn reject_stereo_bond(&self) -> Result<(), SmilesError> {
        if matches!(self.peek(), Some(b'/' | b'\\')) {
            return Err(SmilesError::Unsupported {
                what: "a directional bond",
                position: self.pos,
            });
        }
        Ok(())
    }

    fn chain(&mut self) -> Result<Chain, SmilesError> {
        if !self.at_atom() {
            return Err(match self.peek() {
                None => SmilesError::DanglingBond { position: self.pos },
                Some(_) => self.unexpected(),
            });
        }
        let head = self.branched()?;
        let mut tail = Vec::new();
        loop {
            self.reject_stereo_bond()?;
            let bond_at = self.pos;
            let bond = self.bond_symbol();
            if bond.is_some() {
                self.pos += 1;
            }
            if self.at_atom() {
                tail.push((bond, self.branched()?));
            } else if bond.is_some() {
                return Err(SmilesError::DanglingBond { position: bond_at });
            } else {
                break;
            }
        }
        Ok(Chain { head, tail })
    }

    fn branched(&mut self) -> Result<BranchedAtom, SmilesError> {
        let atom = self.atom()?;
        let mut rings = Vec::new();
        loop {
            self.reject_stereo_bond()?;
            let (written, offset) = match self.bond_symbol() {
                Some(b) => (Some(b), 1),
                None => (None, 0),
            };
            let digit = match self.peek_at(offset) {
                Some(d) if d.is_ascii_digit() => {
                    self.pos += offset + 1;
                    u16::from(d - b'0')
                }
                Some(b'%') => {
                    let start = self.pos + offset;
                    let (a, b) = (self.s.get(start + 1), self.s.get(start + 2));
                    match (a, b) {
                        (Some(a), Some(b)) if a.is_ascii_digit() && b.is_ascii_digit() => {
                            self.pos = start + 3;
                            u16::from(a - b'0') * 10 + u16::from(b - b'0')
                        }
                        _ => {
                            return Err(SmilesError::UnexpectedCharacter {
                                found: '%',
                                position: start,
                            })
                        }
                    }
                }
                _ => break,
            };
            rings.push(self.ring(digit, written, atom.index)?);
        }
        let mut branches = Vec::new();
        while self.peek() == Some(b'(') {
            let open_at = self.pos;
            self.pos += 1;
            self.reject_stereo_bond()?;
            let bond = self.bond_symbol();
            if bond.is_some() {
                self.pos += 1;
            }
            if self.peek().is_none() || self.peek() == Some(b')') && bond.is_none() {
                return Err(SmilesError::UnbalancedParenthesis { position: open_at });
            }
            let chain = self.chain()?;
            if self.peek() != Some(b')') {
                return Err(match self.peek() {
                    None => SmilesError::UnbalancedParenthesis { position: open_at },
                    Some(_) => self.unexpected(),
                });
            }
            self.pos += 1;
            branches.push(Branch { bond, chain });
        }
        Ok(BranchedAtom {
            atom,
            rings,
            branches,
        })
    }

    fn ring(
        &mut self,
        digit: u16,
        written: Option<Bond>,
        atom: usize,
    ) -> Result<RingMark, SmilesError> {
        if let Some(closure) = self.open.remove(&digit) {
            let ring = &mut self.rings[closure];
            ring.close_atom = atom;
            ring.bond = match (ring.bond, written) {
                (Some(a), Some(b)) if a != b => {
                    return Err(SmilesError::RingBondConflict { digit })
                }
                (a, b) => a.or(b),
            };
            Ok(RingMark {
                digit,
                written,
                closure,
            })
        } else {
            let closure = self.rings.len();
            self.rings.push(RingClosure {
                digit,
                open_atom: atom,
                close_atom: atom,
                bond: written,
            });
            self.open.insert(digit, closure);
            Ok(RingMark {
                digit,
                written,
                closure,
            })
        }
    }

    fn next_index(&mut self) -> usize {
        self.atoms += 1;
        self.atoms - 1
    }

    fn atom(&mut self) -> Result<Atom, SmilesError> {
        let start = self.pos;
        let c = self.peek().ok_or_else(|| self.unexpected())?;
        if c == b'[' {
            return self.bracket();
        }
        if c == b'*' {
            return Err(SmilesError::Unsupported {
                what: "a wildcard atom",
                position: start,
            });
        }
        let two = self.s.get(start..start + 2);
        let (symbol, aromatic, len) = match (c, two) {
            (_, Some(b"Cl")) => ("Cl", false, 2),
            (_, Some(b"Br")) => ("Br", false, 2),
            (b'C' | b'N' | b'O' | b'P' | b'S' | b'I', _) => {
                (ascii(&self.s[start..start + 1]), false, 1)
            }
            (b'c' | b'n' | b'o' | b's', _) => (ascii(&self.s[start..start + 1]), true, 1),
            _ => {
                return Err(SmilesError::UnknownElement {
                    symbol: (c as char).to_string(),
                    position: start,
                })
            }
        };
        self.pos += len;
        let element = element_for(symbol, aromatic).expect("organic subset symbols are known");
        Ok(Atom {
            index: self.next_index(),
            element,
            aromatic,
            bracket: None,
        })
    }

    fn bracket(&mut self) -> Result<Atom, SmilesError> {
        let start = self.pos;
        self.pos += 1;
        let malformed = |reason| SmilesError::MalformedBracket {
            position: start,
            reason,
        };
        if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
            return Err(SmilesError::Unsupported {
                what: "an isotope",
                position: self.pos,
            });
        }
        let symbol_at = self.pos;
        let (element, aromatic) = match self.peek() {
            Some(b'*') => {
                return Err(SmilesError::Unsupported {
                    what: "a wildcard atom",
                    position: symbol_at,
                })
            }
            Some(c) if c.is_ascii_uppercase() => {
                let two = self.s.get(symbol_at..symbol_at + 2).map(ascii);
                match two.and_then(|t| Element::from_symbol(t).map(|e| (e, t.len()))) {
                    Some((e, 2)) => {
                        self.pos += 2;
                        (e, false)
                    }
                    _ => {
                        let one = ascii(&self.s[symbol_at..symbol_at + 1]);
                        let e = Element::from_symbol(one).ok_or_else(|| {
                            SmilesError::UnknownElement {
                                symbol: symbol_text(self.s, symbol_at),
                                position: symbol_at,
                            }
                        })?;
                        // A trailing lowercase letter would have made a two-letter symbol.
                        if matches!(self.peek_at(1), Some(l) if l.is_ascii_lowercase()) {
                            return Err(SmilesError::UnknownElement {
                                symbol: symbol_text(self.s, symbol_at),
                                position: symbol_at,
                            });
                        }
                        self.pos += 1;
                        (e, false)
                    }
                }
            }
            Some(c) if c.is_ascii_lowercase() => {
                let one = ascii(&self.s[symbol_at..symbol_at + 1]);
                let e = element_for(one, true).ok_or_else(|| SmilesError::UnknownElement {
                    symbol: symbol_text(self.s, symbol_at),
                    position: symbol_at,
                })?;
                if matches!(self.peek_at(1), Some(l) if l.is_ascii_lowercase()) {
                    return Err(SmilesError::UnknownElement {
                        symbol: symbol_text(self.s, symbol_at),
                        position: symbol_at,
                    });
                }
                self.pos += 1;
                (e, true)
            }
            _ => return Err(malformed("missing element symbol")),
        };

        let mut info = BracketInfo::default();
        if self.peek() == Some(b'@') {
            self.pos += 1;
            info.chirality = Some(if self.peek() == Some(b'@') {
                self.pos += 1;
                Chirality::Clockwise
            } else {
                Chirality::Anticlockwise
            });
            if matches!(self.peek(), Some(c) if c.is_ascii_uppercase() && c != b'H') {
                return Err(SmilesError::Unsupported {
                    what: "extended chirality",
                    position: self.pos,
                });
            }
        }
        if self.peek() == Some(b'H') {
            self.pos += 1;
            info.hydrogens = match self.peek() {
                Some(d) if d.is_ascii_digit() => {
                    self.pos += 1;
                    d - b'0'
                }
                _ => 1,
            };
        }
        if let Some(sign @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let unit: i8 = if sign == b'+' { 1 } else { -1 };
            let mut charge = unit;
            match self.peek() {
                Some(d) if d.is_ascii_digit() => {
                    self.pos += 1;
                    charge = unit * (d - b'0') as i8;
                }
                _ => {
                    while self.peek() == Some(sign) {
                        self.pos += 1;
                        charge += unit;
                    }
                }
            }
            info.charge = charge;
        }
        match self.peek() {
            Some(b']') => self.pos += 1,
            Some(b':') => {
                return Err(SmilesError::Unsupported {
                    what: "an atom class",
                    position: self.pos,
                })
            }
            None => return Err(malformed("missing ']'")),
            Some(_) => return Err(malformed("unexpected character inside brackets")),
        }
        Ok(Atom {
            index: self.next_index(),
            element,
            aromatic,
            bracket: Some(info),
        })
    }
}

fn ascii(bytes: &[u8]) -> &str {
    std::str::from_utf8(bytes).expect("input was checked to be ASCII")
}

fn symbol_text(s: &[u8], at: usize) -> String {
    let end = (at + 1..s.len())
        .find(|&i| !s[i].is_ascii_lowercase())
        .unwrap_or(s.len());
    ascii(&s[at..end]).to_string()
}

fn element_for(symbol: &str, aromatic: bool) -> Option<Element> {
    if aromatic {
        let upper = symbol.to_ascii_uppercase();
        Element::from_symbol(&upper).filter(|e| e.can_be_aromatic())
    } else {
        Element::from_symbol(symbol)
    }
}
