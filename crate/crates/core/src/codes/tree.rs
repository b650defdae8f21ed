//! Prefix codes for ordered rooted trees.
//!
//! Strict binary trees: `F` per fork, `L` per leaf in prefix order, one bit
//! per node; the codeword ends when leaves outnumber forks by one.
//!
//! General trees: `d` on each descent, `u` on each ascent, plus one extra
//! `u` to terminate, `2E + 1` bits in all.

use std::fmt;

use super::CodesError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StrictBinaryTree {
    Leaf,
    Fork(Box<StrictBinaryTree>, Box<StrictBinaryTree>),
}

impl StrictBinaryTree {
    pub fn fork(left: StrictBinaryTree, right: StrictBinaryTree) -> Self {
        StrictBinaryTree::Fork(Box::new(left), Box::new(right))
    }

    pub fn node_count(&self) -> usize {
        match self {
            StrictBinaryTree::Leaf => 1,
            StrictBinaryTree::Fork(l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    pub fn encode(&self) -> String {
        let mut out = String::with_capacity(self.node_count());
        let mut pending = vec![self];
        while let Some(node) = pending.pop() {
            match node {
                StrictBinaryTree::Leaf => out.push('L'),
                StrictBinaryTree::Fork(l, r) => {
                    out.push('F');
                    pending.push(r);
                    pending.push(l);
                }
            }
        }
        out
    }

    /// Decodes a complete codeword. Anything after the point where
    /// `#L = #F + 1` is an error.
    pub fn decode(code: &str) -> Result<Self, CodesError> {
        // Forks still waiting for children, with the children seen so far.
        let mut open: Vec<Vec<StrictBinaryTree>> = Vec::new();
        for (position, symbol) in code.chars().enumerate() {
            let mut node = match symbol {
                'F' => {
                    open.push(Vec::with_capacity(2));
                    continue;
                }
                'L' => StrictBinaryTree::Leaf,
                _ => return Err(CodesError::InvalidSymbol { symbol, position }),
            };
            loop {
                let Some(parent) = open.last_mut() else {
                    let rest = code.chars().count() - position - 1;
                    if rest > 0 {
                        return Err(CodesError::Trailing {
                            position: position + 1,
                        });
                    }
                    return Ok(node);
                };
                parent.push(node);
                if parent.len() < 2 {
                    break;
                }
                let mut children = open.pop().unwrap();
                let right = children.pop().unwrap();
                let left = children.pop().unwrap();
                node = StrictBinaryTree::fork(left, right);
            }
        }
        Err(CodesError::Truncated)
    }
}

impl fmt::Display for StrictBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrictBinaryTree::Leaf => write!(f, "(L)"),
            StrictBinaryTree::Fork(l, r) => write!(f, "(F {l} {r})"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GeneralTree {
    pub children: Vec<GeneralTree>,
}

impl GeneralTree {
    pub fn leaf() -> Self {
        GeneralTree::default()
    }

    pub fn with_children(children: Vec<GeneralTree>) -> Self {
        GeneralTree { children }
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    pub fn encode(&self) -> String {
        fn walk(t: &GeneralTree, out: &mut String) {
            for child in &t.children {
                out.push('d');
                walk(child, out);
                out.push('u');
            }
        }
        let mut out = String::with_capacity(2 * self.edge_count() + 1);
        walk(self, &mut out);
        out.push('u');
        out
    }

    pub fn decode(code: &str) -> Result<Self, CodesError> {
        let mut path = vec![GeneralTree::leaf()];
        for (position, symbol) in code.chars().enumerate() {
            match symbol {
                'd' => path.push(GeneralTree::leaf()),
                'u' => {
                    let node = path.pop().unwrap();
                    match path.last_mut() {
                        Some(parent) => parent.children.push(node),
                        None => {
                            if code.chars().count() > position + 1 {
                                return Err(CodesError::Trailing {
                                    position: position + 1,
                                });
                            }
                            return Ok(node);
                        }
                    }
                }
                _ => return Err(CodesError::InvalidSymbol { symbol, position }),
            }
        }
        Err(CodesError::Truncated)
    }
}

impl fmt::Display for GeneralTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, child) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{child}")?;
        }
        write!(f, ")")
    }
}

/// Reads the parenthesised renderings produced by `Display`.
struct Rendering<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl<'a> Rendering<'a> {
    fn new(text: &'a str) -> Self {
        Rendering {
            chars: text.char_indices().peekable(),
        }
    }

    fn next(&mut self) -> Option<(usize, char)> {
        while let Some(&(_, c)) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.chars.next();
        }
        self.chars.next()
    }

    fn peek(&mut self) -> Option<char> {
        while let Some(&(_, c)) = self.chars.peek() {
            if !c.is_whitespace() {
                return Some(c);
            }
            self.chars.next();
        }
        None
    }

    fn expect(&mut self, want: char) -> Result<(), CodesError> {
        match self.next() {
            Some((_, c)) if c == want => Ok(()),
            Some((position, symbol)) => Err(CodesError::InvalidSymbol { symbol, position }),
            None => Err(CodesError::Truncated),
        }
    }

    fn finish(&mut self) -> Result<(), CodesError> {
        match self.next() {
            None => Ok(()),
            Some((position, _)) => Err(CodesError::Trailing { position }),
        }
    }

    fn strict(&mut self) -> Result<StrictBinaryTree, CodesError> {
        self.expect('(')?;
        let tree = match self.next() {
            Some((_, 'L')) => StrictBinaryTree::Leaf,
            Some((_, 'F')) => {
                let left = self.strict()?;
                let right = self.strict()?;
                StrictBinaryTree::fork(left, right)
            }
            Some((position, symbol)) => return Err(CodesError::InvalidSymbol { symbol, position }),
            None => return Err(CodesError::Truncated),
        };
        self.expect(')')?;
        Ok(tree)
    }

    fn general(&mut self) -> Result<GeneralTree, CodesError> {
        self.expect('(')?;
        let mut children = Vec::new();
        loop {
            match self.peek() {
                Some(')') => {
                    self.next();
                    return Ok(GeneralTree::with_children(children));
                }
                Some(_) => children.push(self.general()?),
                None => return Err(CodesError::Truncated),
            }
        }
    }
}

impl std::str::FromStr for StrictBinaryTree {
    type Err = CodesError;

    /// Parses `(L)` or `(F <left> <right>)`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut r = Rendering::new(text);
        let tree = r.strict()?;
        r.finish()?;
        Ok(tree)
    }
}

impl std::str::FromStr for GeneralTree {
    type Err = CodesError;

    /// Parses nested parentheses, one pair per node: `(() ())`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut r = Rendering::new(text);
        let tree = r.general()?;
        r.finish()?;
        Ok(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use StrictBinaryTree::Leaf;

    #[test]
    fn strict_examples() {
        assert_eq!(Leaf.encode(), "L");
        assert_eq!(StrictBinaryTree::fork(Leaf, Leaf).encode(), "FLL");
        let balanced = StrictBinaryTree::fork(
            StrictBinaryTree::fork(Leaf, Leaf),
            StrictBinaryTree::fork(Leaf, Leaf),
        );
        assert_eq!(balanced.encode(), "FFLLFLL");
        assert_eq!(StrictBinaryTree::decode("L").unwrap(), Leaf);
        assert_eq!(
            StrictBinaryTree::decode("FLL").unwrap(),
            StrictBinaryTree::fork(Leaf, Leaf)
        );
        assert_eq!(StrictBinaryTree::decode("FFLLFLL").unwrap(), balanced);
    }

    #[test]
    fn strict_errors() {
        assert_eq!(StrictBinaryTree::decode(""), Err(CodesError::Truncated));
        assert_eq!(StrictBinaryTree::decode("FL"), Err(CodesError::Truncated));
        assert_eq!(
            StrictBinaryTree::decode("FLLL"),
            Err(CodesError::Trailing { position: 3 })
        );
        assert_eq!(
            StrictBinaryTree::decode("FxL"),
            Err(CodesError::InvalidSymbol {
                symbol: 'x',
                position: 1
            })
        );
    }

    #[test]
    fn general_examples() {
        let one = GeneralTree::with_children(vec![GeneralTree::leaf()]);
        let two = GeneralTree::with_children(vec![GeneralTree::leaf(), GeneralTree::leaf()]);
        assert_eq!(GeneralTree::leaf().encode(), "u");
        assert_eq!(one.encode(), "duu");
        assert_eq!(two.encode(), "duduu");
        assert_eq!(GeneralTree::decode("duduu").unwrap(), two);
        assert_eq!(two.to_string(), "(() ())");
    }

    #[test]
    fn general_errors() {
        assert_eq!(GeneralTree::decode(""), Err(CodesError::Truncated));
        assert_eq!(GeneralTree::decode("dud"), Err(CodesError::Truncated));
        assert_eq!(
            GeneralTree::decode("uu"),
            Err(CodesError::Trailing { position: 1 })
        );
        assert_eq!(
            GeneralTree::decode("dLu"),
            Err(CodesError::InvalidSymbol {
                symbol: 'L',
                position: 1
            })
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(Leaf.to_string(), "(L)");
        assert_eq!(
            StrictBinaryTree::fork(Leaf, Leaf).to_string(),
            "(F (L) (L))"
        );
        assert_eq!(
            "(F (L) (L))".parse::<StrictBinaryTree>().unwrap(),
            StrictBinaryTree::fork(Leaf, Leaf)
        );
        assert_eq!(" ( L ) ".parse::<StrictBinaryTree>().unwrap(), Leaf);
        assert_eq!(
            "(F (L))".parse::<StrictBinaryTree>(),
            Err(CodesError::InvalidSymbol {
                symbol: ')',
                position: 6
            })
        );
        assert_eq!(
            "(L) (L)".parse::<StrictBinaryTree>(),
            Err(CodesError::Trailing { position: 4 })
        );
        assert_eq!(
            "(F (L)".parse::<StrictBinaryTree>(),
            Err(CodesError::Truncated)
        );
        let two: GeneralTree = "(() ())".parse().unwrap();
        assert_eq!(two.encode(), "duduu");
        assert_eq!("()".parse::<GeneralTree>().unwrap(), GeneralTree::leaf());
        assert_eq!("(()".parse::<GeneralTree>(), Err(CodesError::Truncated));
        assert!("(x)".parse::<GeneralTree>().is_err());
    }
}
