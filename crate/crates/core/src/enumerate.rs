//! Isomorph-free generation of triangulated spheres and exhaustive checks.
//!
//! Spheres are grown from the tetrahedron by vertex splitting (the inverse
//! of edge contraction); every sphere triangulation arises this way because
//! each one other than the tetrahedron has a contractible edge. Duplicates
//! are removed with a canonical form: the smallest breadth-first relabeling
//! over all flags.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::Serialize;

use crate::builtins;
use crate::cover::check_belyi_theorem;
use crate::error::{Error, Result};
use crate::geometry::check_penta_absence;
use crate::monodromy::check_odd_pair;
use crate::platonic::{check_kvert, exceptional_vertices, lie_across_an_edge};
use crate::surface::{third, SimplicialSurface, Vertex};

/// Sorted relabeled triangles of the lexicographically smallest
/// breadth-first relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<[Vertex; 3]>);

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|t| format!("{}.{}.{}", t[0], t[1], t[2]))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl std::str::FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Json(format!("bad canonical form {s:?}"));
        s.split(';')
            .map(|t| {
                let v: Vec<Vertex> = t
                    .split('.')
                    .map(|x| x.parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                <[Vertex; 3]>::try_from(v).map_err(|_| bad())
            })
            .collect::<Result<Vec<_>>>()
            .map(CanonicalForm)
    }
}

/// Breadth-first relabeling from the oriented triangle `(x, y, z)`. The
/// neighbor across `(a, b)` of `(a, b, c)` is visited as `(b, a, w)`.
fn bfs_relabel(
    s: &SimplicialSurface,
    start: [Vertex; 3],
) -> (Vec<[Vertex; 3]>, BTreeMap<Vertex, Vertex>) {
    let mut label: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for &v in &start {
        let n = label.len() as Vertex;
        label.insert(v, n);
    }
    let mut seen = vec![false; s.num_triangles()];
    seen[s.triangle_index(&start).expect("start triangle")] = true;
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::with_capacity(s.num_triangles());
    while let Some([a, b, c]) = queue.pop_front() {
        let mut t = [label[&a], label[&b], label[&c]];
        t.sort_unstable();
        out.push(t);
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let Some(ts) = s.edge_triangles(x, y) else {
                continue;
            };
            for &n in ts {
                if seen[n] {
                    continue;
                }
                seen[n] = true;
                let w = third(s.triangle(n), x, y);
                if !label.contains_key(&w) {
                    let next = label.len() as Vertex;
                    label.insert(w, next);
                }
                queue.push_back([y, x, w]);
            }
        }
    }
    out.sort_unstable();
    (out, label)
}

/// Canonical form of a connected surface and a relabeling realizing it.
pub fn canonical_form(s: &SimplicialSurface) -> (CanonicalForm, BTreeMap<Vertex, Vertex>) {
    s.flags()
        .map(|f| bfs_relabel(s, f.vertices))
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(t, l)| (CanonicalForm(t), l))
        .expect("surface has a flag")
}

/// Spheres obtained from `s` by splitting one vertex `v`: the fan triangles
/// from `u_i` to `u_j` move to a new vertex `v'`, and the triangles
/// `v v' u_i`, `v v' u_j` are added.
pub fn vertex_splits(s: &SimplicialSurface) -> Vec<SimplicialSurface> {
    let fresh = s.vertices().iter().max().expect("nonempty") + 1;
    let mut out = Vec::new();
    for &v in s.vertices() {
        let (fan, link) = s.vertex_fan(v).expect("known vertex");
        let d = fan.len();
        for i in 0..d {
            for j in i + 1..d {
                let mut facets: Vec<[Vertex; 3]> = Vec::with_capacity(s.num_triangles() + 2);
                let moved: Vec<usize> = fan[i..j].to_vec();
                for (t, tri) in s.triangles().iter().enumerate() {
                    if moved.contains(&t) {
                        facets.push(tri.map(|x| if x == v { fresh } else { x }));
                    } else {
                        facets.push(*tri);
                    }
                }
                facets.push([v, fresh, link[i]]);
                facets.push([v, fresh, link[j]]);
                if let Ok(t) = SimplicialSurface::new(facets) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Every sphere triangulation with 4 to `n_max` vertices, once up to
/// isomorphism, labeled canonically; sorted by vertex count and then by
/// canonical form.
pub fn sphere_triangulations(n_max: usize) -> Vec<SimplicialSurface> {
    sphere_triangulations_with_forms(n_max)
        .into_iter()
        .map(|(_, s)| s)
        .collect()
}

pub fn sphere_triangulations_with_forms(n_max: usize) -> Vec<(CanonicalForm, SimplicialSurface)> {
    if n_max < 4 {
        return Vec::new();
    }
    let canonical = |s: &SimplicialSurface| {
        let (form, _) = canonical_form(s);
        let surface =
            SimplicialSurface::new(form.0.iter().copied()).expect("relabeling preserves validity");
        (form, surface)
    };
    let mut level: BTreeMap<CanonicalForm, SimplicialSurface> =
        BTreeMap::from([canonical(&builtins::tetrahedron())]);
    let mut all: Vec<(CanonicalForm, SimplicialSurface)> = level.clone().into_iter().collect();
    for _ in 5..=n_max {
        let mut next = BTreeMap::new();
        for s in level.values() {
            for t in vertex_splits(s) {
                let (form, surface) = canonical(&t);
                next.entry(form).or_insert(surface);
            }
        }
        all.extend(next.clone());
        level = next;
    }
    all
}

const CACHE_HEADER: &str = "# trisurf-corpus v1";

/// Writes a corpus: a header line, then `<canonical form>\t<surface JSON>` per sphere.
pub fn write_cache(
    path: &Path,
    n_max: usize,
    corpus: &[(CanonicalForm, SimplicialSurface)],
) -> Result<()> {
    let io = |e: std::io::Error| Error::Json(e.to_string());
    let mut f = fs::File::create(path).map_err(io)?;
    writeln!(f, "{CACHE_HEADER} n_max={n_max}").map_err(io)?;
    for (form, s) in corpus {
        writeln!(f, "{form}\t{}", s.to_json()).map_err(io)?;
    }
    Ok(())
}

/// Reads a corpus written for the same `n_max`; `None` if the file is
/// missing or was written for another size or format version.
pub fn read_cache(
    path: &Path,
    n_max: usize,
) -> Result<Option<Vec<(CanonicalForm, SimplicialSurface)>>> {
    let Ok(f) = fs::File::open(path) else {
        return Ok(None);
    };
    let mut lines = BufReader::new(f).lines();
    let header = lines
        .next()
        .transpose()
        .map_err(|e| Error::Json(e.to_string()))?;
    if header.as_deref() != Some(format!("{CACHE_HEADER} n_max={n_max}").as_str()) {
        return Ok(None);
    }
    let mut out = Vec::new();
    for line in lines {
        let line = line.map_err(|e| Error::Json(e.to_string()))?;
        let (form, json) = line
            .split_once('\t')
            .ok_or_else(|| Error::Json("missing tab".into()))?;
        let form: CanonicalForm = form.parse()?;
        let s = SimplicialSurface::from_json(json)?;
        if canonical_form(&s).0 != form {
            return Err(Error::Json(format!(
                "cached surface does not match its canonical form {form}"
            )));
        }
        out.push((form, s));
    }
    Ok(Some(out))
}

/// Loads the corpus from `path` if it matches, otherwise generates and stores it.
pub fn sphere_triangulations_cached(
    n_max: usize,
    path: &Path,
) -> Result<Vec<(CanonicalForm, SimplicialSurface)>> {
    if let Some(c) = read_cache(path, n_max)? {
        return Ok(c);
    }
    let c = sphere_triangulations_with_forms(n_max);
    write_cache(path, n_max, &c)?;
    Ok(c)
}

/// One failed check on one sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub canonical: String,
    /// `odd-pair`, `adjacent-k`, `across-edge-k`, `penta`, `belyi`, or `internal`.
    pub check: String,
    pub message: String,
}

/// Counts gathered for one `k` over the corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KCensus {
    /// Spheres with exactly two exceptional vertices.
    pub two_exceptional: usize,
    /// Of those, pairs lying across an edge (for k > 2).
    pub across_edge: usize,
    /// Rolling from the first to the second gives one color on every strip.
    pub transport_strip_independent: usize,
    /// Rolling gives the second vertex the color of the first.
    pub transport_matches_first: usize,
    /// Spheres whose degrees are all divisible by k.
    pub no_exceptional: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub n_max: usize,
    pub ks: Vec<usize>,
    pub spheres_by_n: BTreeMap<usize, usize>,
    /// Number of spheres by their count of odd vertices.
    pub odd_vertex_counts: BTreeMap<usize, usize>,
    /// Spheres with four pairwise adjacent odd vertices.
    pub four_adjacent_odd: usize,
    pub census: BTreeMap<usize, KCensus>,
    pub vertex_colorable: usize,
    pub face_colorable: usize,
    pub violations: Vec<Violation>,
}

impl CorpusReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations grouped by check name.
    pub fn violation_counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for v in &self.violations {
            *m.entry(v.check.clone()).or_insert(0) += 1;
        }
        m
    }
}

/// Runs every check on every sphere of the corpus.
pub fn verify_spheres(
    corpus: &[(CanonicalForm, SimplicialSurface)],
    n_max: usize,
    ks: &[usize],
) -> CorpusReport {
    let mut report = CorpusReport {
        n_max,
        ks: ks.to_vec(),
        spheres_by_n: BTreeMap::new(),
        odd_vertex_counts: BTreeMap::new(),
        four_adjacent_odd: 0,
        census: ks.iter().map(|&k| (k, KCensus::default())).collect(),
        vertex_colorable: 0,
        face_colorable: 0,
        violations: Vec::new(),
    };
    for (form, s) in corpus {
        let n = s.num_vertices();
        *report.spheres_by_n.entry(n).or_insert(0) += 1;
        let mut found = Vec::new();
        let mut fail = |check: &str, message: String| {
            found.push(Violation {
                n,
                canonical: form.to_string(),
                check: check.into(),
                message,
            });
        };
        let odd: Vec<Vertex> = crate::monodromy::odd_vertices(s).into_iter().collect();
        *report.odd_vertex_counts.entry(odd.len()).or_insert(0) += 1;
        if odd.len() == 4
            && odd
                .iter()
                .all(|&a| odd.iter().all(|&b| a == b || s.has_edge(a, b)))
        {
            report.four_adjacent_odd += 1;
        }
        for &k in ks {
            let exc = exceptional_vertices(s, k);
            let census = report.census.get_mut(&k).expect("initialized");
            if exc.is_empty() {
                census.no_exceptional += 1;
            }
            if exc.len() == 2 {
                census.two_exceptional += 1;
                if k > 2 && lie_across_an_edge(s, exc[0], exc[1]) {
                    census.across_edge += 1;
                }
            }
            let result = if k == 2 {
                check_odd_pair(s).map(|_| None)
            } else {
                check_kvert(s, k).map(Some)
            };
            match result {
                Ok(Some(r)) => {
                    if let Some(t) = r.transport {
                        census.transport_strip_independent += usize::from(t.strip_independent());
                        census.transport_matches_first += usize::from(t.matches_first());
                    }
                }
                Ok(None) => {}
                Err(Error::AssertionFailure(m)) => {
                    let check = if k == 2 {
                        "odd-pair".to_string()
                    } else if s.has_edge(exc[0], exc[1]) {
                        format!("adjacent-{k}")
                    } else {
                        format!("across-edge-{k}")
                    };
                    fail(&check, m);
                }
                Err(e) => fail("internal", e.to_string()),
            }
        }
        match check_belyi_theorem(s) {
            Ok(r) => {
                report.vertex_colorable += usize::from(r.vertex_colorable);
                report.face_colorable += usize::from(r.face_colorable);
            }
            Err(Error::AssertionFailure(m)) => fail("belyi", m),
            Err(e) => fail("internal", e.to_string()),
        }
        report.violations.extend(found);
    }
    let spheres: Vec<SimplicialSurface> = corpus.iter().map(|(_, s)| s.clone()).collect();
    if let Err(e) = check_penta_absence(&spheres) {
        report.violations.push(Violation {
            n: 0,
            canonical: String::new(),
            check: "penta".into(),
            message: e.to_string(),
        });
    }
    report
}

/// Generates the corpus up to `n_max` and verifies it.
pub fn verify_corpus(n_max: usize, ks: &[usize]) -> CorpusReport {
    verify_spheres(&sphere_triangulations_with_forms(n_max), n_max, ks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_label_invariant() {
        let s = builtins::octahedron();
        let t = s.relabel(|v| 100 - 3 * v).unwrap();
        assert_eq!(canonical_form(&s).0, canonical_form(&t).0);
        assert_ne!(
            canonical_form(&s).0,
            canonical_form(&builtins::icosahedron()).0
        );
    }

    #[test]
    fn canonical_form_round_trips_as_text() {
        let f = canonical_form(&builtins::tetrahedron()).0;
        assert_eq!(f.to_string(), "0.1.2;0.1.3;0.2.3;1.2.3");
        assert_eq!(f.to_string().parse::<CanonicalForm>().unwrap(), f);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (4..=7)
            .map(|n| {
                sphere_triangulations(7)
                    .iter()
                    .filter(|s| s.num_vertices() == n)
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5]);
    }

    #[test]
    fn tetrahedron_splits_to_bipyramid() {
        let splits = vertex_splits(&builtins::tetrahedron());
        assert!(!splits.is_empty());
        assert!(splits
            .iter()
            .all(|s| s.num_vertices() == 5 && s.euler_characteristic() == 2));
    }
}
