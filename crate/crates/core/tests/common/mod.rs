//! Independent oracles shared by the integration tests. None of them reuses
//! the library's search, canonical form or monodromy code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use trisurf::{SimplicialSurface, Vertex};

type SearchKey = (Vec<Vec<Vertex>>, Vec<(Vertex, Vertex)>);

/// Advancing-front search for a triangulated `n`-gon (boundary `0..n` in
/// order, no further boundary vertices) with at most `max_interior` interior
/// vertices and every vertex of even degree. Returns the triangles found.
pub fn even_disk_search(n: usize, max_interior: usize) -> Option<Vec<[Vertex; 3]>> {
    let front = vec![(0..n as Vertex).collect::<Vec<_>>()];
    let mut edges = BTreeSet::new();
    for i in 0..n {
        let (a, b) = (i as Vertex, ((i + 1) % n) as Vertex);
        edges.insert((a.min(b), a.max(b)));
    }
    let mut st = DiskState {
        fronts: front,
        edges,
        triangles: Vec::new(),
        next: n as Vertex,
        limit: n + max_interior,
    };
    let mut dead = HashSet::new();
    if st.search(&mut dead) {
        Some(st.triangles)
    } else {
        None
    }
}

struct DiskState {
    /// Cycles bounding the still untriangulated region, each oriented so the
    /// region lies on a fixed side.
    fronts: Vec<Vec<Vertex>>,
    edges: BTreeSet<(Vertex, Vertex)>,
    triangles: Vec<[Vertex; 3]>,
    next: Vertex,
    limit: usize,
}

impl DiskState {
    fn key(&self) -> SearchKey {
        let mut fr: Vec<Vec<Vertex>> = self
            .fronts
            .iter()
            .map(|c| {
                let m = c.iter().position_min().unwrap();
                c[m..].iter().chain(&c[..m]).copied().collect()
            })
            .collect();
        fr.sort();
        (fr, self.edges.iter().copied().collect())
    }

    fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == v || *b == v)
            .count()
    }

    fn on_front(&self, v: Vertex) -> bool {
        self.fronts.iter().any(|c| c.contains(&v))
    }

    fn search(&mut self, dead: &mut HashSet<SearchKey>) -> bool {
        if self.fronts.is_empty() {
            return true;
        }
        let key = self.key();
        if dead.contains(&key) {
            return false;
        }
        // smallest open edge
        let (ci, pos) = self
            .fronts
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| (0..c.len()).map(move |p| (ci, p)))
            .min_by_key(|&(ci, p)| {
                let c = &self.fronts[ci];
                let (a, b) = (c[p], c[(p + 1) % c.len()]);
                (a.min(b), a.max(b))
            })
            .unwrap();
        let cycle = self.fronts[ci].clone();
        let m = cycle.len();
        let rot: Vec<Vertex> = cycle[pos..].iter().chain(&cycle[..pos]).copied().collect();
        let (a, b) = (rot[0], rot[1]);
        let rest: Vec<Vertex> = rot[2..].to_vec();
        let mut candidates: Vec<Option<usize>> = (0..rest.len()).map(Some).collect();
        if (self.next as usize) < self.limit {
            candidates.push(None);
        }
        for cand in candidates {
            let saved = (
                self.fronts.clone(),
                self.edges.clone(),
                self.triangles.len(),
                self.next,
            );
            let ok = self.apply(ci, a, b, &rest, m, cand);
            if ok && self.search(dead) {
                return true;
            }
            self.fronts = saved.0;
            self.edges = saved.1;
            self.triangles.truncate(saved.2);
            self.next = saved.3;
        }
        dead.insert(key);
        false
    }

    /// Adds the triangle on front edge `a b` with third vertex `rest[i]` or a
    /// new vertex; returns false if that breaks simpliciality or parity.
    fn apply(
        &mut self,
        ci: usize,
        a: Vertex,
        b: Vertex,
        rest: &[Vertex],
        _m: usize,
        cand: Option<usize>,
    ) -> bool {
        let e = |x: Vertex, y: Vertex| (x.min(y), x.max(y));
        self.fronts.remove(ci);
        let before: BTreeSet<Vertex> = rest.iter().copied().chain([a, b]).collect();
        match cand {
            None => {
                let w = self.next;
                self.next += 1;
                self.edges.insert(e(a, w));
                self.edges.insert(e(b, w));
                self.triangles.push([a, b, w]);
                let mut c = vec![a, w, b];
                c.extend(rest);
                self.fronts.push(c);
            }
            Some(i) => {
                let w = rest[i];
                // cycle b, rest[0..=i] closed by w b ; cycle w, rest[i+1..], a closed by a w
                let c1: Vec<Vertex> = std::iter::once(b)
                    .chain(rest[..=i].iter().copied())
                    .collect();
                let c2: Vec<Vertex> = rest[i..]
                    .iter()
                    .copied()
                    .chain(std::iter::once(a))
                    .collect();
                for (c, x, y) in [(&c1, w, b), (&c2, a, w)] {
                    if c.len() > 2 {
                        if self.edges.contains(&e(x, y)) {
                            return false;
                        }
                        self.edges.insert(e(x, y));
                    }
                }
                self.triangles.push([a, b, w]);
                for c in [c1, c2] {
                    if c.len() > 2 {
                        self.fronts.push(c);
                    }
                }
            }
        }
        // a front that revisits a vertex would pinch it
        for c in &self.fronts {
            if c.iter().collect::<BTreeSet<_>>().len() != c.len() {
                return false;
            }
        }
        before
            .into_iter()
            .all(|v| self.on_front(v) || self.degree(v).is_multiple_of(2))
    }
}

/// Closed connected surfaces with `χ = 2` on exactly the vertices `0..n`,
/// found by include/exclude search over all triples, deduplicated by the
/// minimum over all `n!` relabelings.
pub fn brute_force_spheres(n: usize) -> Vec<Vec<[Vertex; 3]>> {
    let triples: Vec<[Vertex; 3]> = (0..n as Vertex)
        .combinations(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect();
    let mut last: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for (i, t) in triples.iter().enumerate() {
        for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            last.insert((x, y), i);
        }
    }
    let need = 2 * n - 4;
    let mut found: Vec<Vec<[Vertex; 3]>> = Vec::new();
    let mut seen: HashSet<Vec<[Vertex; 3]>> = HashSet::new();
    let mut chosen = Vec::new();
    let mut count: BTreeMap<(Vertex, Vertex), u8> = BTreeMap::new();
    fn rec(
        i: usize,
        triples: &[[Vertex; 3]],
        last: &BTreeMap<(Vertex, Vertex), usize>,
        need: usize,
        chosen: &mut Vec<[Vertex; 3]>,
        count: &mut BTreeMap<(Vertex, Vertex), u8>,
        out: &mut dyn FnMut(&[[Vertex; 3]]),
    ) {
        if chosen.len() == need {
            if count.values().all(|&c| c == 0 || c == 2) {
                out(chosen);
            }
            return;
        }
        if i == triples.len() || triples.len() - i < need - chosen.len() {
            return;
        }
        let t = triples[i];
        let es = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
        // include
        if es.iter().all(|e| count.get(e).copied().unwrap_or(0) < 2) {
            for e in es {
                *count.entry(e).or_insert(0) += 1;
            }
            chosen.push(t);
            if es.iter().all(|e| last[e] != i || matches!(count[e], 0 | 2)) {
                rec(i + 1, triples, last, need, chosen, count, out);
            }
            chosen.pop();
            for e in es {
                *count.get_mut(&e).unwrap() -= 1;
            }
        }
        // exclude
        if es
            .iter()
            .all(|e| last[e] != i || matches!(count.get(e).copied().unwrap_or(0), 0 | 2))
        {
            rec(i + 1, triples, last, need, chosen, count, out);
        }
    }
    let perms: Vec<Vec<Vertex>> = (0..n as Vertex).permutations(n).collect();
    let relabel = |fs: &[[Vertex; 3]], p: &[Vertex]| {
        let mut r: Vec<[Vertex; 3]> = fs
            .iter()
            .map(|t| {
                let mut u = [p[t[0] as usize], p[t[1] as usize], p[t[2] as usize]];
                u.sort_unstable();
                u
            })
            .collect();
        r.sort_unstable();
        r
    };
    let mut accept = |fs: &[[Vertex; 3]]| {
        let key = fs.to_vec();
        if seen.contains(&key) {
            return;
        }
        let Ok(s) = SimplicialSurface::new(fs.iter().copied()) else {
            return;
        };
        if s.num_vertices() != n
            || !s.is_connected()
            || s.euler_characteristic() != 2
            || !s.is_closed()
        {
            return;
        }
        let orbit: Vec<Vec<[Vertex; 3]>> = perms.iter().map(|p| relabel(fs, p)).collect();
        found.push(orbit.iter().min().unwrap().clone());
        seen.extend(orbit);
    };
    rec(
        0,
        &triples,
        &last,
        need,
        &mut chosen,
        &mut count,
        &mut accept,
    );
    found.sort();
    found
}

/// Brute-force canonical form: the smallest relabeled sorted facet list.
pub fn brute_canonical(s: &SimplicialSurface) -> Vec<[Vertex; 3]> {
    let vs: Vec<Vertex> = s.vertices().to_vec();
    let n = vs.len();
    let idx: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    (0..n as Vertex)
        .permutations(n)
        .map(|p| {
            let mut r: Vec<[Vertex; 3]> = s
                .triangles()
                .iter()
                .map(|t| {
                    let mut u = t.map(|v| p[idx[&v]]);
                    u.sort_unstable();
                    u
                })
                .collect();
            r.sort_unstable();
            r
        })
        .min()
        .unwrap()
}

/// Number of vertex permutations preserving the triangle set.
pub fn brute_force_automorphism_count(s: &SimplicialSurface) -> usize {
    let vs: Vec<Vertex> = s.vertices().to_vec();
    let tris: BTreeSet<[Vertex; 3]> = s.triangles().iter().copied().collect();
    vs.iter()
        .copied()
        .permutations(vs.len())
        .filter(|p| {
            let map: BTreeMap<Vertex, Vertex> = vs.iter().copied().zip(p.iter().copied()).collect();
            s.triangles().iter().all(|t| {
                let mut u = t.map(|v| map[&v]);
                u.sort_unstable();
                tris.contains(&u)
            })
        })
        .count()
}

/// Order of the three-color monodromy computed by union-find over all
/// (triangle, coloring) pairs: the number of colorings of triangle 0 in the
/// class of the coloring (1, 2, 3).
pub fn union_find_monodromy_order(s: &SimplicialSurface) -> usize {
    let perms: Vec<Vec<u8>> = (1..=3u8).permutations(3).collect();
    let f = s.num_triangles();
    let mut parent: Vec<usize> = (0..6 * f).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for t in 0..f {
        let tri = s.triangle(t);
        for (pi, col) in perms.iter().enumerate() {
            for u in 0..f {
                let other = s.triangle(u);
                let shared: Vec<Vertex> =
                    tri.iter().copied().filter(|v| other.contains(v)).collect();
                if u == t || shared.len() != 2 {
                    continue;
                }
                // colors of u: shared keep, third gets the remaining color
                let color_of = |v: Vertex| col[tri.iter().position(|&w| w == v).unwrap()];
                let used: u8 = shared.iter().map(|&v| color_of(v)).sum();
                let ucol: Vec<u8> = other
                    .iter()
                    .map(|&v| {
                        if shared.contains(&v) {
                            color_of(v)
                        } else {
                            6 - used
                        }
                    })
                    .collect();
                let qi = perms.iter().position(|q| *q == ucol).unwrap();
                let (ra, rb) = (find(&mut parent, 6 * t + pi), find(&mut parent, 6 * u + qi));
                parent[ra] = rb;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..6).filter(|&i| find(&mut parent, i) == root).count()
}

/// Graph distance between two vertices of a surface.
pub fn graph_distance(s: &SimplicialSurface, a: Vertex, b: Vertex) -> usize {
    let mut dist = BTreeMap::from([(a, 0usize)]);
    let mut frontier = vec![a];
    while !dist.contains_key(&b) {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in s.vertices() {
                if s.has_edge(v, w) && !dist.contains_key(&w) {
                    dist.insert(w, dist[&v] + 1);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist[&b]
}
