use std::fmt;
use std::str::FromStr;

use crate::form::FormError;

/// Which algebra a form lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Undirected signed forms; union is idempotent. The default.
    Base,
    /// Integer multiplicities on vertices and edges; loops are allowed and
    /// union adds coefficients instead of collapsing them.
    Arithmetical,
    /// Directed edges only, with the twist involution.
    Oriented,
    /// Undirected and directed edges side by side.
    Mixed,
}

impl Mode {
    pub fn allows_directed(self) -> bool {
        matches!(self, Mode::Oriented | Mode::Mixed)
    }

    pub fn allows_undirected(self) -> bool {
        !matches!(self, Mode::Oriented)
    }

    pub fn is_arithmetical(self) -> bool {
        matches!(self, Mode::Arithmetical)
    }

    /// Base, oriented and mixed forms only carry signs; arithmetical forms
    /// take any nonzero integer.
    pub fn allows_coefficient(self, coeff: i64) -> bool {
        match self {
            Mode::Arithmetical => coeff != 0,
            _ => coeff == 1 || coeff == -1,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Base => "base",
            Mode::Arithmetical => "arithmetical",
            Mode::Oriented => "oriented",
            Mode::Mixed => "mixed",
        })
    }
}

impl FromStr for Mode {
    type Err = FormError;

    fn from_str(s: &str) -> Result<Self, FormError> {
        match s {
            "base" => Ok(Mode::Base),
            "arith" | "arithmetical" => Ok(Mode::Arithmetical),
            "oriented" => Ok(Mode::Oriented),
            "mixed" => Ok(Mode::Mixed),
            _ => Err(FormError::UnknownMode(s.to_string())),
        }
    }
}

/// A vertex name: `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexAtom(String);

impl VertexAtom {
    pub fn new(name: impl Into<String>) -> Result<Self, FormError> {
        let name = name.into();
        let mut chars = name.chars();
        let head_ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            Ok(VertexAtom(name))
        } else {
            Err(FormError::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Undirected,
    Directed,
}

/// An edge key. Undirected endpoints are stored sorted, so `{a,b}` and
/// `{b,a}` are the same key; directed endpoints keep their order. The derived
/// order puts undirected keys before directed ones, which fixes the display
/// and serialization order of mixed forms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    kind: EdgeKind,
    a: VertexAtom,
    b: VertexAtom,
}

impl EdgeKey {
    /// Undirected key; sorts the endpoints. Equal endpoints make a loop,
    /// which only arithmetical forms accept.
    pub fn undirected(u: VertexAtom, w: VertexAtom) -> Self {
        let (a, b) = if u <= w { (u, w) } else { (w, u) };
        EdgeKey { kind: EdgeKind::Undirected, a, b }
    }

    /// Directed key from `u` to `w`. Directed loops are rejected in every
    /// mode.
    pub fn directed(u: VertexAtom, w: VertexAtom) -> Result<Self, FormError> {
        if u == w {
            return Err(FormError::DirectedLoop(u));
        }
        Ok(EdgeKey { kind: EdgeKind::Directed, a: u, b: w })
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    pub fn ends(&self) -> (&VertexAtom, &VertexAtom) {
        (&self.a, &self.b)
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    /// The key with its direction reversed; undirected keys are unchanged.
    pub fn reversed(&self) -> Self {
        match self.kind {
            EdgeKind::Undirected => self.clone(),
            EdgeKind::Directed => EdgeKey {
                kind: EdgeKind::Directed,
                a: self.b.clone(),
                b: self.a.clone(),
            },
        }
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EdgeKind::Undirected => write!(f, "{{{},{}}}", self.a, self.b),
            EdgeKind::Directed => write!(f, "({},{})", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(s: &str) -> VertexAtom {
        VertexAtom::new(s).unwrap()
    }

    #[test]
    fn vertex_names_follow_identifier_rules() {
        assert!(VertexAtom::new("v1").is_ok());
        assert!(VertexAtom::new("_x").is_ok());
        assert!(VertexAtom::new("").is_err());
        assert!(VertexAtom::new("9x").is_err());
        assert!(VertexAtom::new("a-b").is_err());
        assert!(VertexAtom::new("né").is_err());
    }

    #[test]
    fn undirected_keys_sort_their_endpoints() {
        assert_eq!(atom("b"), {
            let k = EdgeKey::undirected(atom("b"), atom("a"));
            k.ends().1.clone()
        });
        assert_eq!(
            EdgeKey::undirected(atom("b"), atom("a")),
            EdgeKey::undirected(atom("a"), atom("b")),
        );
    }

    #[test]
    fn directed_keys_keep_order_and_reject_loops() {
        let k = EdgeKey::directed(atom("b"), atom("a")).unwrap();
        assert_eq!(k.ends().0.as_str(), "b");
        assert_eq!(k.reversed().ends().0.as_str(), "a");
        assert!(matches!(
            EdgeKey::directed(atom("a"), atom("a")),
            Err(FormError::DirectedLoop(_))
        ));
    }

    #[test]
    fn undirected_keys_order_before_directed() {
        let und = EdgeKey::undirected(atom("z"), atom("z2"));
        let dir = EdgeKey::directed(atom("a"), atom("b")).unwrap();
        assert!(und < dir);
    }

    #[test]
    fn key_display_distinguishes_kinds() {
        assert_eq!(EdgeKey::undirected(atom("b"), atom("a")).to_string(), "{a,b}");
        assert_eq!(
            EdgeKey::directed(atom("b"), atom("a")).unwrap().to_string(),
            "(b,a)"
        );
    }

    #[test]
    fn mode_strings_round_trip() {
        for m in [Mode::Base, Mode::Arithmetical, Mode::Oriented, Mode::Mixed] {
            assert_eq!(m.to_string().parse::<Mode>().unwrap(), m);
        }
        assert_eq!("arith".parse::<Mode>().unwrap(), Mode::Arithmetical);
        assert!("simple".parse::<Mode>().is_err());
    }
}
