use std::fmt;
use std::str::FromStr;

use super::decoration::is_valid_label;
use super::NckError;

/// A decorated planar rooted tree. Children are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    pub label: String,
    pub children: Vec<Tree>,
}

/// An ordered sequence of trees; the empty forest is the unit `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    pub trees: Vec<Tree>,
}

impl Tree {
    pub fn leaf(label: impl Into<String>) -> Self {
        Tree {
            label: label.into(),
            children: Vec::new(),
        }
    }

    pub fn node(label: impl Into<String>, children: Vec<Tree>) -> Self {
        Tree {
            label: label.into(),
            children,
        }
    }

    /// The ladder with `len` vertices, all labelled `label`.
    pub fn ladder(label: &str, len: usize) -> Self {
        assert!(len >= 1);
        let mut t = Tree::leaf(label);
        for _ in 1..len {
            t = Tree::node(label, vec![t]);
        }
        t
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Tree::vertex_count).sum::<usize>()
    }

    /// Sum of `weight(label)` over all vertices.
    pub fn weight(&self, weight: &impl Fn(&str) -> usize) -> usize {
        weight(&self.label)
            + self
                .children
                .iter()
                .map(|c| c.weight(weight))
                .sum::<usize>()
    }

    pub fn labels(&self) -> Vec<&str> {
        let mut out = vec![self.label.as_str()];
        for c in &self.children {
            out.extend(c.labels());
        }
        out
    }
}

impl Forest {
    pub fn unit() -> Self {
        Forest::default()
    }

    pub fn new(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn is_unit(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Concatenation product.
    pub fn product(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest { trees }
    }

    pub fn weight(&self, weight: &impl Fn(&str) -> usize) -> usize {
        self.trees.iter().map(|t| t.weight(weight)).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(Tree::vertex_count).sum()
    }

    /// Splits off the first tree: `f = first · rest`.
    pub fn split_first(&self) -> Option<(Forest, Forest)> {
        let (first, rest) = self.trees.split_first()?;
        Some((Forest::new(vec![first.clone()]), Forest::new(rest.to_vec())))
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest { trees: vec![t] }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, what: &str) -> NckError {
        NckError::Parse(format!("{what} at byte {} of `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn label(&mut self) -> Result<String, NckError> {
        let rest = &self.src[self.pos..];
        let end = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        let label = &rest[..end];
        if !is_valid_label(label) {
            return Err(self.error("expected a label"));
        }
        self.pos += end;
        Ok(label.to_string())
    }

    fn tree(&mut self) -> Result<Tree, NckError> {
        let label = self.label()?;
        let mut children = Vec::new();
        if self.peek() == Some('[') {
            self.pos += 1;
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(']') if !children.is_empty() => {
                        self.pos += 1;
                        break;
                    }
                    Some(_) => children.push(self.tree()?),
                    None => return Err(self.error("unclosed `[`")),
                }
            }
        }
        Ok(Tree { label, children })
    }
}

impl FromStr for Forest {
    type Err = NckError;

    /// Parses the text form: `1` for the unit, otherwise whitespace-separated
    /// trees written `label` or `label[child child ...]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "1" {
            return Ok(Forest::unit());
        }
        let mut p = Parser { src: s, pos: 0 };
        let mut trees = Vec::new();
        loop {
            p.skip_ws();
            if p.peek().is_none() {
                break;
            }
            trees.push(p.tree()?);
            if let Some(c) = p.peek() {
                if !c.is_whitespace() {
                    return Err(p.error("expected whitespace between trees"));
                }
            }
        }
        if trees.is_empty() {
            return Err(NckError::Parse(
                "empty forest text (write `1` for the unit)".into(),
            ));
        }
        Ok(Forest { trees })
    }
}

impl FromStr for Tree {
    type Err = NckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut f: Forest = s.parse()?;
        if f.trees.len() != 1 {
            return Err(NckError::Parse(format!("`{s}` is not a single tree")));
        }
        Ok(f.trees.remove(0))
    }
}
