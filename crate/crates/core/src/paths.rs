//! Lattice-path machinery behind the closed-form dynamics.
//!
//! From a positive labeling of `[r] x [s]` we build a weighted acyclic graph
//! on `[r+1] x [s]`: each cell `(i, j)` contributes a downward edge
//! `(i, j) -> (i+1, j)` of weight `1/x_ij`, and every `(i, j) -> (i+1, j-1)`
//! step has weight one. Boundary vertices are labeled `P_1..P_(r+s)` along
//! the top/right and `Q_1..Q_(r+s)` along the left/bottom; the matrix of
//! total path weights `P_i -> Q_j` has the property that its solid minors
//! count weighted families of vertex-disjoint paths (Lindstrom-Gessel-
//! Viennot), which is what ties toggling to the octahedron recurrence.
//!
//! The module also carries the brute-force enumeration oracles for path
//! families, the minor-quotient fast path for interval weights, and the
//! tile-replacement bijection between families in the rectangle and
//! families in the graph.

use alloc::format;
use alloc::vec::Vec;

use crate::dynamics::Labeling;
use crate::error::{Error, Result};
use crate::minors::MinorArray;
use crate::poset::{Cell, Interval, Rect};
use crate::rational::Rational;

/// A vertex of the auxiliary graph, `1 <= i <= r+1`, `1 <= j <= s`.
pub type GrVertex = (usize, usize);

/// The boundary vertex `P_m` of the graph on `[r+1] x [s]`.
pub fn boundary_source(rect: Rect, m: usize) -> Result<GrVertex> {
    let (r, s) = (rect.rows(), rect.cols());
    if m >= 1 && m <= s {
        Ok((1, m))
    } else if m > s && m <= r + s {
        Ok((m - s + 1, s))
    } else {
        Err(Error::IndexOutOfRange(format!("source index {m}")))
    }
}

/// The boundary vertex `Q_m` of the graph on `[r+1] x [s]`.
pub fn boundary_sink(rect: Rect, m: usize) -> Result<GrVertex> {
    let (r, s) = (rect.rows(), rect.cols());
    if m >= 1 && m <= r {
        Ok((m, 1))
    } else if m > r && m <= r + s {
        Ok((r + 1, m - r))
    } else {
        Err(Error::IndexOutOfRange(format!("sink index {m}")))
    }
}

/// The auxiliary weighted graph of a positive labeling.
#[derive(Debug, Clone)]
pub struct GrGraph {
    labeling: Labeling,
}

impl GrGraph {
    /// Builds the graph; labels must be strictly positive.
    pub fn new(labeling: &Labeling) -> Result<GrGraph> {
        labeling.check_carrier(&crate::algebra::Birational)?;
        Ok(GrGraph {
            labeling: labeling.clone(),
        })
    }

    pub fn rect(&self) -> Rect {
        self.labeling.rect()
    }

    fn rows(&self) -> usize {
        self.rect().rows() + 1
    }

    fn cols(&self) -> usize {
        self.rect().cols()
    }

    /// Weight of the directed edge `from -> to`, if it exists.
    pub fn edge_weight(&self, from: GrVertex, to: GrVertex) -> Option<Rational> {
        let (i, j) = from;
        if i < 1 || j < 1 || i >= self.rows() + 1 || j > self.cols() || to.0 != i + 1 {
            return None;
        }
        if i + 1 > self.rows() {
            return None;
        }
        if to.1 == j {
            // Downward edge through cell (i, j).
            self.labeling
                .get(Cell::new(i, j))
                .recip()
                .ok()
        } else if to.1 + 1 == j && to.1 >= 1 {
            Some(Rational::one())
        } else {
            None
        }
    }

    /// Outgoing neighbors of a vertex.
    pub fn successors(&self, (i, j): GrVertex) -> Vec<GrVertex> {
        let mut out = Vec::with_capacity(2);
        if i + 1 <= self.rows() {
            out.push((i + 1, j));
            if j >= 2 {
                out.push((i + 1, j - 1));
            }
        }
        out
    }

    /// Number of weighted edges plus weight-one edges:
    /// `r*s + r*(s-1)`.
    pub fn edge_count(&self) -> usize {
        let r = self.rect().rows();
        let s = self.rect().cols();
        r * s + r * (s - 1)
    }

    /// The boundary vertex `P_m`, `1 <= m <= r+s`.
    pub fn source(&self, m: usize) -> Result<GrVertex> {
        boundary_source(self.rect(), m)
    }

    /// The boundary vertex `Q_m`, `1 <= m <= r+s`.
    pub fn sink(&self, m: usize) -> Result<GrVertex> {
        boundary_sink(self.rect(), m)
    }

    /// The `(r+s) x (r+s)` matrix of total path weights `P_i -> Q_j`,
    /// computed by dynamic programming in topological (row) order.
    pub fn path_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.rect().rows() + self.rect().cols();
        let mut matrix = Vec::with_capacity(n);
        for src in 1..=n {
            let start = self.source(src).expect("valid source");
            // weights[i-1][j-1]: total weight of paths start -> (i, j).
            let mut weights =
                alloc::vec![alloc::vec![Rational::zero(); self.cols()]; self.rows()];
            weights[start.0 - 1][start.1 - 1] = Rational::one();
            for i in start.0..self.rows() {
                for j in 1..=self.cols() {
                    let w = weights[i - 1][j - 1].clone();
                    if w.is_zero() {
                        continue;
                    }
                    for to in self.successors((i, j)) {
                        let ew = self.edge_weight((i, j), to).expect("listed edge");
                        let acc = &weights[to.0 - 1][to.1 - 1] + &(&w * &ew);
                        weights[to.0 - 1][to.1 - 1] = acc;
                    }
                }
            }
            let row = (1..=n)
                .map(|dst| {
                    let q = self.sink(dst).expect("valid sink");
                    weights[q.0 - 1][q.1 - 1].clone()
                })
                .collect();
            matrix.push(row);
        }
        matrix
    }

    /// All solid minors of the path matrix.
    pub fn minor_array(&self) -> MinorArray {
        MinorArray::from_matrix(&self.path_matrix())
    }
}

/// A family of vertex-disjoint paths in the graph, stored as vertex
/// sequences; weights live on edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrPathCollection {
    pub paths: Vec<Vec<GrVertex>>,
}

impl GrPathCollection {
    pub fn weight(&self, g: &GrGraph) -> Rational {
        let mut acc = Rational::one();
        for path in &self.paths {
            for pair in path.windows(2) {
                acc = &acc * &g.edge_weight(pair[0], pair[1]).expect("edge in path");
            }
        }
        acc
    }
}

/// A family of vertex-disjoint monotone paths in the rectangle, stored as
/// cell sequences; weights live on vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPathCollection {
    pub paths: Vec<Vec<Cell>>,
}

impl RPathCollection {
    pub fn weight(&self, x: &Labeling) -> Rational {
        let mut acc = Rational::one();
        for path in &self.paths {
            for &c in path {
                acc = &acc * x.get(c);
            }
        }
        acc
    }
}

const PATH_COUNT_GUARD: u64 = 1_000_000;
const FAMILY_SIZE_GUARD: usize = 6;

fn disjoint<T: PartialEq>(paths: &[Vec<T>]) -> bool {
    for (idx, a) in paths.iter().enumerate() {
        for b in &paths[idx + 1..] {
            if a.iter().any(|v| b.contains(v)) {
                return false;
            }
        }
    }
    true
}

fn cartesian_filter_disjoint<T: Clone + PartialEq>(per_path: &[Vec<Vec<T>>]) -> Vec<Vec<Vec<T>>> {
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<T>> = Vec::new();
    fn rec<T: Clone + PartialEq>(
        per_path: &[Vec<Vec<T>>],
        chosen: &mut Vec<Vec<T>>,
        out: &mut Vec<Vec<Vec<T>>>,
    ) {
        let Some((head, rest)) = per_path.split_first() else {
            out.push(chosen.clone());
            return;
        };
        'candidates: for candidate in head {
            for prior in chosen.iter() {
                if candidate.iter().any(|v| prior.contains(v)) {
                    continue 'candidates;
                }
            }
            chosen.push(candidate.clone());
            rec(rest, chosen, out);
            chosen.pop();
        }
    }
    rec(per_path, &mut chosen, &mut out);
    out
}

fn monotone_paths_in_interval(interval: Interval, from: Cell, to: Cell) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    let mut current = alloc::vec![from];
    fn rec(to: Cell, current: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
        let at = *current.last().expect("nonempty");
        if at == to {
            out.push(current.clone());
            return;
        }
        if at.i < to.i {
            current.push(Cell::new(at.i + 1, at.j));
            rec(to, current, out);
            current.pop();
        }
        if at.j < to.j {
            current.push(Cell::new(at.i, at.j + 1));
            rec(to, current, out);
            current.pop();
        }
    }
    if interval.contains(from) && interval.contains(to) && from.i <= to.i && from.j <= to.j {
        rec(to, &mut current, &mut out);
    }
    out
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut acc = 1u64;
    for t in 0..k {
        acc = acc.saturating_mul(n - t) / (t + 1);
    }
    acc
}

/// Enumerates every family of `k` vertex-disjoint monotone paths in the
/// interval from `(i1, j1) .. (i1, j1+k-1)` to `(i2, j2-k+1) .. (i2, j2)`.
///
/// This is the desk-scale oracle; it refuses when a single source-sink pair
/// admits more than a million paths or `k` exceeds six. `k = 0` yields the
/// single empty family of weight one.
pub fn enumerate_interval_collections(
    interval: Interval,
    k: usize,
) -> Result<Vec<RPathCollection>> {
    if k > interval.cols() {
        return Err(Error::IndexOutOfRange(format!(
            "family size {k} exceeds interval width {}",
            interval.cols()
        )));
    }
    if k > FAMILY_SIZE_GUARD {
        return Err(Error::SizeGuard(format!("family size {k} > {FAMILY_SIZE_GUARD}")));
    }
    if k == 0 {
        return Ok(alloc::vec![RPathCollection { paths: Vec::new() }]);
    }
    let single = binomial_u64(
        (interval.rows() - 1 + interval.cols() - 1) as u64,
        (interval.rows() - 1) as u64,
    );
    if single > PATH_COUNT_GUARD {
        return Err(Error::SizeGuard(format!(
            "about {single} single-pair paths exceeds {PATH_COUNT_GUARD}"
        )));
    }
    let per_path: Vec<Vec<Vec<Cell>>> = (0..k)
        .map(|t| {
            monotone_paths_in_interval(
                interval,
                Cell::new(interval.i1, interval.j1 + t),
                Cell::new(interval.i2, interval.j2 - k + 1 + t),
            )
        })
        .collect();
    Ok(cartesian_filter_disjoint(&per_path)
        .into_iter()
        .map(|paths| RPathCollection { paths })
        .collect())
}

fn gr_paths_between(g: &GrGraph, from: GrVertex, to: GrVertex) -> Vec<Vec<GrVertex>> {
    let mut out = Vec::new();
    let mut current = alloc::vec![from];
    fn rec(g: &GrGraph, to: GrVertex, current: &mut Vec<GrVertex>, out: &mut Vec<Vec<GrVertex>>) {
        let at = *current.last().expect("nonempty");
        if at == to {
            out.push(current.clone());
            return;
        }
        for next in g.successors(at) {
            // Column indices only decrease, rows only increase.
            if next.0 > to.0 || next.1 < to.1 {
                continue;
            }
            current.push(next);
            rec(g, to, current, out);
            current.pop();
        }
    }
    rec(g, to, &mut current, &mut out);
    out
}

/// Enumerates every family of `k` vertex-disjoint paths in the graph from
/// `P_i .. P_(i+k-1)` to `Q_j .. Q_(j+k-1)`. Same guards as the interval
/// oracle.
pub fn enumerate_gr_collections(
    g: &GrGraph,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Vec<GrPathCollection>> {
    if k > FAMILY_SIZE_GUARD {
        return Err(Error::SizeGuard(format!("family size {k} > {FAMILY_SIZE_GUARD}")));
    }
    if k == 0 {
        return Ok(alloc::vec![GrPathCollection { paths: Vec::new() }]);
    }
    let n = g.rect().rows() + g.rect().cols();
    if i + k - 1 > n || j + k - 1 > n {
        return Err(Error::IndexOutOfRange(format!(
            "family (i={i}, j={j}, k={k}) leaves the boundary range 1..={n}"
        )));
    }
    let per_path: Vec<Vec<Vec<GrVertex>>> = (0..k)
        .map(|t| -> Result<Vec<Vec<GrVertex>>> {
            Ok(gr_paths_between(g, g.source(i + t)?, g.sink(j + t)?))
        })
        .collect::<Result<_>>()?;
    if per_path.iter().any(|paths| paths.len() as u64 > PATH_COUNT_GUARD) {
        return Err(Error::SizeGuard("single-pair path count".into()));
    }
    Ok(cartesian_filter_disjoint(&per_path)
        .into_iter()
        .map(|paths| GrPathCollection { paths })
        .collect())
}

/// Total weight of the `k`-path families of a corner-anchored interval, as
/// the quotient of two minors of a prebuilt array.
pub fn w_interval_from(
    w: &MinorArray,
    rect: Rect,
    interval: Interval,
    k: usize,
) -> Result<Rational> {
    if !interval.corner_anchored(rect) {
        return Err(Error::NotCornerAnchored(format!(
            "[{},{}] x [{},{}]",
            interval.i1, interval.i2, interval.j1, interval.j2
        )));
    }
    if k > interval.cols() {
        return Err(Error::IndexOutOfRange(format!(
            "family size {k} exceeds interval width {}",
            interval.cols()
        )));
    }
    let (i1, i2, j1, j2) = (
        interval.i1 as i64,
        interval.i2 as i64,
        interval.j1 as i64,
        interval.j2 as i64,
    );
    let k = k as i64;
    let numer = w.get(i1 + j1 + k - 1, i2 + j1, j2 - j1 - k + 1);
    let denom = w.get(i1 + j1 - 1, i2 + j1, j2 - j1 + 1);
    if denom.is_zero() {
        return Err(Error::DivisionByZero(format!(
            "minor at ({}, {}, {})",
            i1 + j1 - 1,
            i2 + j1,
            j2 - j1 + 1
        )));
    }
    Ok(&numer / &denom)
}

/// Convenience wrapper building the minor array from the labeling.
pub fn w_interval(x: &Labeling, interval: Interval, k: usize) -> Result<Rational> {
    let g = GrGraph::new(x)?;
    w_interval_from(&g.minor_array(), x.rect(), interval, k)
}

/// Oracle value of `w_I^(k)`: the sum over the enumerated families.
pub fn w_interval_oracle(x: &Labeling, interval: Interval, k: usize) -> Result<Rational> {
    let collections = enumerate_interval_collections(interval, k)?;
    Ok(collections
        .iter()
        .fold(Rational::zero(), |acc, c| &acc + &c.weight(x)))
}

/// Product of the labels inside an interval, `w_I`.
pub fn interval_label_product(x: &Labeling, interval: Interval) -> Rational {
    interval
        .cells()
        .fold(Rational::one(), |acc, c| &acc * x.get(c))
}

fn validate_interval_collection(
    interval: Interval,
    k: usize,
    collection: &RPathCollection,
) -> Result<()> {
    if collection.paths.len() != k {
        return Err(Error::MalformedCollection(format!(
            "expected {k} paths, got {}",
            collection.paths.len()
        )));
    }
    for (t, path) in collection.paths.iter().enumerate() {
        let expect_from = Cell::new(interval.i1, interval.j1 + t);
        let expect_to = Cell::new(interval.i2, interval.j2 - k + 1 + t);
        let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
            return Err(Error::MalformedCollection("empty path".into()));
        };
        if first != expect_from || last != expect_to {
            return Err(Error::MalformedCollection(format!(
                "path {t} must run ({},{}) -> ({},{})",
                expect_from.i, expect_from.j, expect_to.i, expect_to.j
            )));
        }
        for pair in path.windows(2) {
            let ok = (pair[1].i == pair[0].i + 1 && pair[1].j == pair[0].j)
                || (pair[1].i == pair[0].i && pair[1].j == pair[0].j + 1);
            if !ok || !interval.contains(pair[1]) {
                return Err(Error::MalformedCollection("step is not a cover move".into()));
            }
        }
    }
    if !disjoint(&collection.paths) {
        return Err(Error::MalformedCollection("paths share a vertex".into()));
    }
    Ok(())
}

/// The tile-replacement bijection: sends a `k`-family in a corner-anchored
/// interval to the matching family in the graph, dividing weight by the
/// label product of the interval.
///
/// The tile rule is local: at each row of the interval, a graph path
/// standing on a column takes the weighted downward edge exactly when that
/// cell is *not* covered by the rectangle family, and the weight-one
/// diagonal edge otherwise. Entry and exit runs of diagonal steps connect
/// the interval's subgraph to the boundary vertices.
pub fn tile_bijection(
    rect: Rect,
    interval: Interval,
    k: usize,
    collection: &RPathCollection,
) -> Result<GrPathCollection> {
    if !interval.corner_anchored(rect) {
        return Err(Error::NotCornerAnchored(format!(
            "[{},{}] x [{},{}]",
            interval.i1, interval.i2, interval.j1, interval.j2
        )));
    }
    validate_interval_collection(interval, k, collection)?;
    let covered = |c: Cell| collection.paths.iter().any(|p| p.contains(&c));

    let image_count = interval.cols() - k;
    let mut columns: Vec<usize> = (0..image_count).map(|t| interval.j1 + k + t).collect();
    let mut interior: Vec<Vec<GrVertex>> = columns
        .iter()
        .map(|&c| alloc::vec![(interval.i1, c)])
        .collect();
    for i in interval.i1..=interval.i2 {
        for (t, col) in columns.iter_mut().enumerate() {
            let next_col = if covered(Cell::new(i, *col)) {
                // Cell on a rectangle path: the graph path slides diagonally.
                *col - 1
            } else {
                *col
            };
            if next_col < interval.j1 {
                return Err(Error::MalformedCollection(format!(
                    "image path {t} left the interval at row {i}"
                )));
            }
            interior[t].push((i + 1, next_col));
            *col = next_col;
        }
    }
    for (t, col) in columns.iter().enumerate() {
        if *col != interval.j1 + t {
            return Err(Error::MalformedCollection(format!(
                "image path {t} ends at column {col}, expected {}",
                interval.j1 + t
            )));
        }
    }

    // Extend to the boundary labels by forced diagonal runs.
    let mut paths = Vec::with_capacity(image_count);
    for (t, body) in interior.into_iter().enumerate() {
        let src_index = interval.i1 + interval.j1 + k - 1 + t;
        let dst_index = interval.i2 + interval.j1 + t;
        let src = boundary_source(rect, src_index)?;
        let dst = boundary_sink(rect, dst_index)?;
        let mut path = Vec::new();
        let entry = body[0];
        let mut at = src;
        while at != entry {
            path.push(at);
            at = (at.0 + 1, at.1 - 1);
        }
        path.extend(body.iter().copied());
        let mut at = *path.last().expect("nonempty path");
        while at != dst {
            at = (at.0 + 1, at.1 - 1);
            path.push(at);
        }
        paths.push(path);
    }
    let image = GrPathCollection { paths };
    if !disjoint(&image.paths) {
        return Err(Error::MalformedCollection(
            "image paths are not vertex-disjoint".into(),
        ));
    }
    Ok(image)
}
