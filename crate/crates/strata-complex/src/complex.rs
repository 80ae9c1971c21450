//! The weighted simplicial complex type and its line-oriented input format.

use crate::filtered::FilteredSimplex;
use crate::perversity::{PValue, PerversitySpec};
use crate::strata::{compute_strata, Stratum};
use crate::ComplexError;
use std::collections::BTreeSet;

/// A finite simplicial complex whose vertices carry weights in {0,…,n}.
/// Vertex ids are assigned so weights are non-decreasing along the id order;
/// every sign convention downstream leans on that global order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedComplex {
    n: usize,
    names: Vec<String>,
    weights: Vec<usize>,
    facets: Vec<Vec<usize>>,
    /// Face closure grouped by dimension.
    faces: Vec<BTreeSet<Vec<usize>>>,
    strata: Vec<Stratum>,
    /// Input position of each vertex id, recording the reorder applied on
    /// construction.
    source_positions: Vec<usize>,
}

impl WeightedComplex {
    pub fn new(
        n: usize,
        vertices: Vec<(String, usize)>,
        facets: Vec<Vec<String>>,
    ) -> Result<Self, ComplexError> {
        if vertices.is_empty() || facets.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let mut seen = BTreeSet::new();
        for (name, w) in &vertices {
            if !seen.insert(name.clone()) {
                return Err(ComplexError::DuplicateVertex(name.clone()));
            }
            if *w > n {
                return Err(ComplexError::WeightOutOfRange { name: name.clone(), weight: *w, max: n });
            }
        }
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by_key(|&i| vertices[i].1);
        let names: Vec<String> = order.iter().map(|&i| vertices[i].0.clone()).collect();
        let weights: Vec<usize> = order.iter().map(|&i| vertices[i].1).collect();
        let id_of = |name: &str| names.iter().position(|m| m == name);
        let mut facet_ids = Vec::new();
        for facet in &facets {
            let mut ids = Vec::new();
            for name in facet {
                ids.push(id_of(name).ok_or_else(|| ComplexError::UnknownVertex(name.clone()))?);
            }
            ids.sort_unstable();
            if ids.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex(facet.join(" ")));
            }
            facet_ids.push(ids);
        }
        let mut faces: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for facet in &facet_ids {
            for mask in 1u32..(1 << facet.len()) {
                let sub: Vec<usize> = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let d = sub.len() - 1;
                while faces.len() <= d {
                    faces.push(BTreeSet::new());
                }
                faces[d].insert(sub);
            }
        }
        if !faces
            .iter()
            .flatten()
            .any(|s| weights[*s.last().unwrap()] == n)
        {
            return Err(ComplexError::NoRegularSimplex);
        }
        let strata = compute_strata(n, &weights, &faces);
        Ok(WeightedComplex {
            n,
            names,
            weights,
            facets: facet_ids,
            faces,
            strata,
            source_positions: order,
        })
    }

    pub fn formal_dimension(&self) -> usize {
        self.n
    }

    /// Top dimension of an actual simplex.
    pub fn geometric_dimension(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|m| m == name)
    }

    pub fn vertex_weight(&self, id: usize) -> usize {
        self.weights[id]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Input position each vertex id came from, i.e. the permutation applied
    /// to obtain the weight-compatible order.
    pub fn source_positions(&self) -> &[usize] {
        &self.source_positions
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.get(d).into_iter().flatten()
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter().flatten()
    }

    /// Facets that are not contained in any other facet: the maximal faces
    /// of the complex.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            let contained = self
                .facets
                .iter()
                .any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v)));
            if !contained && !out.contains(f) {
                out.push(f.clone());
            }
        }
        out.sort();
        out
    }

    /// Maximal simplices containing a vertex of top weight; these witness
    /// every perverse-degree computation.
    pub fn maximal_regular_simplices(&self) -> Vec<Vec<usize>> {
        self.maximal_simplices()
            .into_iter()
            .filter(|f| self.is_regular_simplex(f))
            .collect()
    }

    pub fn contains_simplex(&self, vertices: &[usize]) -> bool {
        !vertices.is_empty()
            && self
                .faces
                .get(vertices.len() - 1)
                .is_some_and(|s| s.contains(vertices))
    }

    pub fn max_weight(&self, vertices: &[usize]) -> usize {
        self.weights[*vertices.last().expect("nonempty simplex")]
    }

    pub fn is_regular_simplex(&self, vertices: &[usize]) -> bool {
        self.max_weight(vertices) == self.n
    }

    /// Splits a simplex into its weight blocks.
    pub fn join_decomposition(&self, vertices: &[usize]) -> Result<FilteredSimplex, ComplexError> {
        if !self.contains_simplex(vertices) {
            return Err(ComplexError::NotASimplex(format!("{:?}", vertices)));
        }
        Ok(FilteredSimplex::from_vertices(vertices, &self.weights, self.n))
    }

    /// Alternating-sign boundary, each face re-split into blocks. The
    /// boundary of a vertex is empty.
    pub fn boundary(&self, s: &FilteredSimplex) -> Vec<(i64, FilteredSimplex)> {
        let verts = s.vertices();
        if verts.len() <= 1 {
            return Vec::new();
        }
        (0..verts.len())
            .map(|skip| {
                let face: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                (sign, FilteredSimplex::from_vertices(&face, &self.weights, self.n))
            })
            .collect()
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn singular_strata(&self) -> impl Iterator<Item = &Stratum> {
        self.strata.iter().filter(|s| s.is_singular)
    }

    pub fn has_codim_one_stratum(&self) -> bool {
        self.strata.iter().any(|s| s.codim == 1)
    }

    /// The stratum holding the open cell of a simplex.
    pub fn stratum_of(&self, vertices: &[usize]) -> Option<&Stratum> {
        let mw = self.max_weight(vertices);
        self.strata
            .iter()
            .find(|s| s.filtration_index == mw && s.members.contains(vertices))
    }

    /// Whether the simplex touches the stratum: its block at the stratum's
    /// index is nonempty and the open face spanned by the corresponding
    /// prefix lies in that stratum's component.
    pub fn meets(&self, s: &FilteredSimplex, stratum: &Stratum) -> bool {
        let i = stratum.filtration_index;
        if s.block(i).is_empty() {
            return false;
        }
        let prefix = s.prefix(i);
        stratum.members.contains(&prefix)
    }

    /// Same vertex set and face closure (weights may differ); the property
    /// relating a complex to its weight recodings.
    pub fn same_underlying(&self, other: &WeightedComplex) -> bool {
        self.names == other.names && self.faces == other.faces
    }

    /// The complex in the line-oriented input format.
    pub fn to_space_text(&self) -> String {
        let mut out = format!("dim {}\n", self.n);
        for id in 0..self.names.len() {
            out.push_str(&format!("vertex {} {}\n", self.names[id], self.weights[id]));
        }
        for facet in &self.facets {
            let names: Vec<&str> = facet.iter().map(|&v| self.names[v].as_str()).collect();
            out.push_str(&format!("simplex {}\n", names.join(" ")));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "formal_dimension": self.n,
            "vertices": (0..self.names.len()).map(|id| serde_json::json!({
                "name": self.names[id],
                "weight": self.weights[id],
            })).collect::<Vec<_>>(),
            "facets": self.facets.iter().map(|f| {
                f.iter().map(|&v| self.names[v].clone()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "strata": self.strata.iter().map(|s| serde_json::json!({
                "index": s.filtration_index,
                "codim": s.codim,
                "singular": s.is_singular,
                "vertices": s.vertex_set.iter().map(|&v| self.names[v].clone()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// A parsed input document: the complex plus an optional perversity request.
#[derive(Clone, Debug)]
pub struct SpaceDocument {
    pub complex: WeightedComplex,
    pub perversity: Option<PerversitySpec>,
}

/// Parses the line format: `dim <n>`, `vertex <name> <weight>`,
/// `simplex <name> ...`, `perversity gm <values>` or
/// `perversity stratum <index>:<value> ...`; `#` starts a comment.
pub fn parse_document(text: &str) -> Result<SpaceDocument, ComplexError> {
    let mut dim: Option<usize> = None;
    let mut vertices: Vec<(String, usize)> = Vec::new();
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut perversity: Option<PerversitySpec> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| ComplexError::Parse { line: no + 1, msg };
        let mut tokens = line.split_whitespace();
        match tokens.next().unwrap() {
            "dim" => {
                let v = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("dim needs a non-negative integer".into()))?;
                if dim.replace(v).is_some() {
                    return Err(err("dim given twice".into()));
                }
            }
            "vertex" => {
                let name = tokens.next().ok_or_else(|| err("vertex needs a name".into()))?;
                let w = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("vertex needs a weight".into()))?;
                vertices.push((name.to_string(), w));
            }
            "simplex" => {
                let names: Vec<String> = tokens.map(|t| t.to_string()).collect();
                if names.is_empty() {
                    return Err(err("simplex needs at least one vertex".into()));
                }
                facets.push(names);
            }
            "perversity" => {
                let spec = parse_perversity_tokens(&mut tokens).map_err(&err)?;
                if perversity.replace(spec).is_some() {
                    return Err(err("perversity given twice".into()));
                }
            }
            other => return Err(err(format!("unknown directive `{}`", other))),
        }
    }
    let n = dim.ok_or(ComplexError::MissingDimension)?;
    let complex = WeightedComplex::new(n, vertices, facets)?;
    Ok(SpaceDocument { complex, perversity })
}

fn parse_perversity_tokens<'a>(
    tokens: &mut impl Iterator<Item = &'a str>,
) -> Result<PerversitySpec, String> {
    match tokens.next() {
        Some("gm") => {
            let mut values = Vec::new();
            for t in tokens {
                values.push(t.parse::<i64>().map_err(|_| format!("bad gm value `{}`", t))?);
            }
            if values.is_empty() {
                return Err("gm perversity needs values".into());
            }
            Ok(PerversitySpec::Gm(values))
        }
        Some("stratum") => {
            let mut pairs = Vec::new();
            for t in tokens {
                let (idx, val) = t
                    .split_once(':')
                    .ok_or_else(|| format!("expected index:value, got `{}`", t))?;
                let idx = idx.parse::<usize>().map_err(|_| format!("bad stratum index `{}`", idx))?;
                let val = val.parse::<PValue>().map_err(|_| format!("bad value `{}`", val))?;
                pairs.push((idx, val));
            }
            Ok(PerversitySpec::PerStratum(pairs))
        }
        _ => Err("perversity needs mode `gm` or `stratum`".into()),
    }
}

/// Parses a document and returns the complex alone.
pub fn load_complex(text: &str) -> Result<WeightedComplex, ComplexError> {
    Ok(parse_document(text)?.complex)
}
