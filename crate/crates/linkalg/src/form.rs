use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::atom::{EdgeKey, EdgeKind, Mode, VertexAtom};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("unknown mode `{0}` (expected base, arith, oriented or mixed)")]
    UnknownMode(String),
    #[error("coefficient {coeff} is not legal in {mode} mode")]
    IllegalCoefficient { coeff: i64, mode: Mode },
    #[error("cannot combine a {0} form with a {1} form")]
    ModeMismatch(Mode, Mode),
    #[error("{op} is not available in {mode} mode")]
    UnsupportedMode { op: &'static str, mode: Mode },
    #[error("scalar {0} is only legal in arithmetical mode")]
    IllegalScalar(i64),
    #[error("directed loop on `{0}` is not allowed")]
    DirectedLoop(VertexAtom),
    #[error("loop on `{0}` is only legal in arithmetical mode")]
    IllegalLoop(VertexAtom),
    #[error("edge {key} is not legal in {mode} mode")]
    IllegalEdge { key: EdgeKey, mode: Mode },
}

/// A key into a form: either a vertex or an edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FormKey {
    Vertex(VertexAtom),
    Edge(EdgeKey),
}

impl fmt::Display for FormKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormKey::Vertex(v) => v.fmt(f),
            FormKey::Edge(k) => k.fmt(f),
        }
    }
}

/// A canonical graph value: a mode plus finite coefficient mappings for
/// vertices and edges.
///
/// Invariants: no key carries coefficient zero; base, oriented and mixed
/// forms only carry +1 or -1; undirected edges appear only where the mode
/// allows them, directed edges likewise; loops only in arithmetical mode.
/// Two forms are equal exactly when their mode and both mappings are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    mode: Mode,
    vertices: BTreeMap<VertexAtom, i64>,
    edges: BTreeMap<EdgeKey, i64>,
}

/// Combines one coefficient into a mapping under the mode's union rule.
///
/// Base rule: an absent key takes the incoming sign, an equal sign collapses,
/// an opposite sign deletes the key. Arithmetical rule: coefficients add and
/// zero sums delete the key.
fn fuse_entry<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, coeff: i64, mode: Mode) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            if mode.is_arithmetical() {
                let sum = *slot.get() + coeff;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            } else if *slot.get() == coeff {
                // collapse: the key is already present with this sign
            } else {
                slot.remove();
            }
        }
    }
}

impl Form {
    /// The empty form, the identity of union in every mode.
    pub fn empty(mode: Mode) -> Self {
        Form { mode, vertices: BTreeMap::new(), edges: BTreeMap::new() }
    }

    /// A single signed vertex.
    pub fn vertex(atom: VertexAtom, coeff: i64, mode: Mode) -> Result<Self, FormError> {
        if !mode.allows_coefficient(coeff) {
            return Err(FormError::IllegalCoefficient { coeff, mode });
        }
        let mut vertices = BTreeMap::new();
        vertices.insert(atom, coeff);
        Ok(Form { mode, vertices, edges: BTreeMap::new() })
    }

    /// A single edge with no vertices. This is how anti-edge terms such as
    /// the one in the star merge rule are represented.
    pub fn single_edge(key: EdgeKey, coeff: i64, mode: Mode) -> Result<Self, FormError> {
        let mut edges = BTreeMap::new();
        edges.insert(key, coeff);
        Form::from_parts(mode, BTreeMap::new(), edges)
    }

    /// Builds a form from raw mappings, checking every mode invariant.
    pub fn from_parts(
        mode: Mode,
        vertices: BTreeMap<VertexAtom, i64>,
        edges: BTreeMap<EdgeKey, i64>,
    ) -> Result<Self, FormError> {
        let form = Form { mode, vertices, edges };
        form.validate()?;
        Ok(form)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vertices(&self) -> &BTreeMap<VertexAtom, i64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeMap<EdgeKey, i64> {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    /// The coefficient of a key, zero when absent.
    pub fn coefficient(&self, key: &FormKey) -> i64 {
        match key {
            FormKey::Vertex(v) => self.vertices.get(v).copied().unwrap_or(0),
            FormKey::Edge(e) => self.edges.get(e).copied().unwrap_or(0),
        }
    }

    /// Checks the mode invariants listed on [`Form`].
    pub fn validate(&self) -> Result<(), FormError> {
        for &coeff in self.vertices.values() {
            if !self.mode.allows_coefficient(coeff) {
                return Err(FormError::IllegalCoefficient { coeff, mode: self.mode });
            }
        }
        for (key, &coeff) in &self.edges {
            if !self.mode.allows_coefficient(coeff) {
                return Err(FormError::IllegalCoefficient { coeff, mode: self.mode });
            }
            let kind_ok = match key.kind() {
                EdgeKind::Undirected => self.mode.allows_undirected(),
                EdgeKind::Directed => self.mode.allows_directed(),
            };
            if !kind_ok {
                return Err(FormError::IllegalEdge { key: key.clone(), mode: self.mode });
            }
            if key.is_loop() && !self.mode.is_arithmetical() {
                return Err(FormError::IllegalLoop(key.ends().0.clone()));
            }
        }
        Ok(())
    }

    /// The anti form: every coefficient flipped.
    pub fn negate(&self) -> Form {
        Form {
            mode: self.mode,
            vertices: self.vertices.iter().map(|(k, &c)| (k.clone(), -c)).collect(),
            edges: self.edges.iter().map(|(k, &c)| (k.clone(), -c)).collect(),
        }
    }

    /// Union of two forms of the same mode, key by key: a key present on one
    /// side survives, equal signs collapse to one, opposite signs cancel.
    /// Arithmetical mode adds coefficients and drops zero sums.
    pub fn fuse(&self, other: &Form) -> Result<Form, FormError> {
        if self.mode != other.mode {
            return Err(FormError::ModeMismatch(self.mode, other.mode));
        }
        let mut out = self.clone();
        for (v, &c) in &other.vertices {
            fuse_entry(&mut out.vertices, v.clone(), c, self.mode);
        }
        for (k, &c) in &other.edges {
            fuse_entry(&mut out.edges, k.clone(), c, self.mode);
        }
        debug_assert!(out.validate().is_ok());
        Ok(out)
    }

    /// The signed vertex support the link operators join: the vertex mapping
    /// fused, edge by edge in key order, with both endpoints of every edge at
    /// the sign of that edge's coefficient. In arithmetical mode an endpoint
    /// contributes the sign with magnitude one, and a loop contributes its
    /// endpoint twice.
    pub fn link_support(&self) -> BTreeMap<VertexAtom, i64> {
        let mut acc = self.vertices.clone();
        for (key, &coeff) in &self.edges {
            let s = if self.mode.is_arithmetical() { coeff.signum() } else { coeff };
            let (u, w) = key.ends();
            fuse_entry(&mut acc, u.clone(), s, self.mode);
            fuse_entry(&mut acc, w.clone(), s, self.mode);
        }
        acc
    }

    /// Undirected link.
    ///
    /// Base and mixed: the union of the operands, further fused with the
    /// complete bipartite edge set between their link supports; a generated
    /// edge `{u,w}` carries the product of the two support signs, and pairs
    /// with `u == w` are skipped. Arithmetical: only the bipartite edges,
    /// with multiplicities multiplied, and `u == w` pairs become loops; the
    /// operands themselves are not carried into the result. Oriented forms
    /// have no undirected link.
    pub fn link(&self, other: &Form) -> Result<Form, FormError> {
        if self.mode != other.mode {
            return Err(FormError::ModeMismatch(self.mode, other.mode));
        }
        match self.mode {
            Mode::Oriented => {
                Err(FormError::UnsupportedMode { op: "undirected link", mode: self.mode })
            }
            Mode::Arithmetical => {
                let mut edges = BTreeMap::new();
                for (u, &mu) in &self.link_support() {
                    for (w, &mw) in &other.link_support() {
                        let key = EdgeKey::undirected(u.clone(), w.clone());
                        fuse_entry(&mut edges, key, mu * mw, self.mode);
                    }
                }
                let out = Form { mode: self.mode, vertices: BTreeMap::new(), edges };
                debug_assert!(out.validate().is_ok());
                Ok(out)
            }
            Mode::Base | Mode::Mixed => {
                let fused = self.fuse(other)?;
                let mut bipartite = Form::empty(self.mode);
                for (u, &su) in &self.link_support() {
                    for (w, &sw) in &other.link_support() {
                        if u != w {
                            let key = EdgeKey::undirected(u.clone(), w.clone());
                            fuse_entry(&mut bipartite.edges, key, su * sw, self.mode);
                        }
                    }
                }
                fused.fuse(&bipartite)
            }
        }
    }

    /// Directed link: as the base link, but the generated edges point from
    /// the left support to the right one, or the other way around when
    /// `reversed` (so `link_directed(a, b, true)` is the "linked from" form).
    pub fn link_directed(&self, other: &Form, reversed: bool) -> Result<Form, FormError> {
        if self.mode != other.mode {
            return Err(FormError::ModeMismatch(self.mode, other.mode));
        }
        if !self.mode.allows_directed() {
            return Err(FormError::UnsupportedMode { op: "directed link", mode: self.mode });
        }
        let fused = self.fuse(other)?;
        let mut bipartite = Form::empty(self.mode);
        for (u, &su) in &self.link_support() {
            for (w, &sw) in &other.link_support() {
                if u != w {
                    let (from, to) =
                        if reversed { (w.clone(), u.clone()) } else { (u.clone(), w.clone()) };
                    let key = EdgeKey::directed(from, to).expect("endpoints are distinct");
                    fuse_entry(&mut bipartite.edges, key, su * sw, self.mode);
                }
            }
        }
        fused.fuse(&bipartite)
    }

    /// Scales every coefficient. Arithmetical forms take any integer (zero
    /// empties the form); the other modes only admit +1 and -1, where -1 is
    /// negation.
    pub fn scale(&self, n: i64) -> Result<Form, FormError> {
        if n == 0 {
            return Ok(Form::empty(self.mode));
        }
        if !self.mode.is_arithmetical() && n != 1 && n != -1 {
            return Err(FormError::IllegalScalar(n));
        }
        Ok(Form {
            mode: self.mode,
            vertices: self.vertices.iter().map(|(k, &c)| (k.clone(), c * n)).collect(),
            edges: self.edges.iter().map(|(k, &c)| (k.clone(), c * n)).collect(),
        })
    }

    /// Reverses every directed edge; undirected edges and vertices are
    /// untouched. Only oriented and mixed forms have a twist.
    pub fn twist(&self) -> Result<Form, FormError> {
        if !self.mode.allows_directed() {
            return Err(FormError::UnsupportedMode { op: "twist", mode: self.mode });
        }
        Ok(Form {
            mode: self.mode,
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|(k, &c)| (k.reversed(), c)).collect(),
        })
    }
}
