//! Intersection numbers and the Farey-graph metric.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cf::cf_expand;
use super::slope::{machine_normalizer, small, Mat2, Slope};

/// Surfaces of complexity one. Their curve graphs are both the Farey graph;
/// they differ in how often Farey neighbours meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    /// Once-punctured torus: neighbours meet once.
    Torus1,
    /// Four-holed sphere: neighbours meet twice.
    Sphere4,
}

impl SurfaceKind {
    pub fn neighbour_intersection(self) -> u32 {
        match self {
            SurfaceKind::Torus1 => 1,
            SurfaceKind::Sphere4 => 2,
        }
    }
}

/// Geometric intersection number `|p_a·q_b − q_a·p_b|`, doubled on the
/// four-holed sphere.
pub fn intersection_number(a: &Slope, b: &Slope, surface: SurfaceKind) -> BigUint {
    let d = a.det(b).magnitude().clone();
    d * surface.neighbour_intersection()
}

/// Vertices of the ladder from `∞` to a rational `x`: the triangles crossed
/// by the vertical line over `x`, with each fan cut down to the vertices a
/// shortest path can use. Vertex values are only computed for the path.
struct Ladder {
    terms: Vec<BigInt>,
    nodes: Vec<Node>,
    adjacency: Vec<Vec<usize>>,
    start: usize,
    end: usize,
}

/// `Conv(k)` is the convergent `c_{k-1}`; `Inner(k, j)` is the fan vertex
/// `c_{k-2} + j·c_{k-1}`, with `j` counted from the far end when `from_top`.
enum Node {
    Conv(usize),
    Inner { k: usize, j: u32, from_top: bool },
}

impl Ladder {
    fn add_node(&mut self, v: Node) -> usize {
        self.nodes.push(v);
        self.adjacency.push(Vec::new());
        self.nodes.len() - 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if u != v && !self.adjacency[u].contains(&v) {
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
        }
    }

    fn build(x: &Slope) -> Ladder {
        let terms = cf_expand(x);
        let small: Vec<Option<u32>> = terms
            .iter()
            .map(|a| a.to_u32().filter(|&v| v <= 3))
            .collect();
        let mut ladder = Ladder::shape(&small);
        ladder.terms = terms;
        ladder
    }

    /// The ladder's graph depends only on which partial quotients are at
    /// most 3 (`Some`) and which are larger (`None`).
    fn shape(small: &[Option<u32>]) -> Ladder {
        let mut ladder = Ladder {
            terms: Vec::new(),
            nodes: Vec::new(),
            adjacency: Vec::new(),
            start: 0,
            end: 0,
        };
        let mut conv_node = vec![ladder.add_node(Node::Conv(0))];
        for k in 0..small.len() {
            let id = ladder.add_node(Node::Conv(k + 1));
            ladder.add_edge(*conv_node.last().unwrap(), id);
            conv_node.push(id);
        }
        // Fan k (k >= 1) pivots on c_{k-1}; its outer vertices are
        // c_{k-2} + j·c_{k-1} for j = 0..=a_k.
        for (k, a) in small.iter().enumerate().skip(1) {
            let pivot = conv_node[k];
            let (before, after) = (conv_node[k - 1], conv_node[k + 1]);
            let mut outer = vec![before];
            match *a {
                Some(v) => {
                    for j in 1..v {
                        outer.push(ladder.add_node(Node::Inner {
                            k,
                            j,
                            from_top: false,
                        }));
                    }
                    outer.push(after);
                    for w in outer.windows(2) {
                        ladder.add_edge(w[0], w[1]);
                    }
                }
                None => {
                    let lo = ladder.add_node(Node::Inner {
                        k,
                        j: 1,
                        from_top: false,
                    });
                    let hi = ladder.add_node(Node::Inner {
                        k,
                        j: 1,
                        from_top: true,
                    });
                    outer.extend([lo, hi, after]);
                    ladder.add_edge(before, lo);
                    ladder.add_edge(hi, after);
                }
            }
            for id in outer {
                ladder.add_edge(pivot, id);
            }
        }
        ladder.start = conv_node[0];
        ladder.end = *conv_node.last().unwrap();
        ladder
    }

    /// Values of the given nodes.
    fn values(&self, ids: &[usize]) -> Vec<Slope> {
        // Convergent vectors c_{-2}, c_{-1}, c_0, ….
        let mut vecs: Vec<(BigInt, BigInt)> = vec![
            (BigInt::zero(), BigInt::one()),
            (BigInt::one(), BigInt::zero()),
        ];
        for a in &self.terms {
            let (h2, k2) = &vecs[vecs.len() - 2];
            let (h1, k1) = &vecs[vecs.len() - 1];
            let next = (a * h1 + h2, a * k1 + k2);
            vecs.push(next);
        }
        ids.iter()
            .map(|&i| match &self.nodes[i] {
                Node::Conv(k) => {
                    let (h, q) = &vecs[k + 1];
                    Slope::from_primitive(h.clone(), q.clone())
                }
                Node::Inner { k, j, from_top } => {
                    let j = if *from_top {
                        &self.terms[*k] - *j
                    } else {
                        BigInt::from(*j)
                    };
                    let ((h2, k2), (h1, k1)) = (&vecs[*k], &vecs[k + 1]);
                    Slope::from_primitive(h2 + &j * h1, k2 + &j * k1)
                }
            })
            .collect()
    }

    fn shortest_path(&self) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.nodes.len()];
        parent[self.start] = self.start;
        let mut queue = VecDeque::from([self.start]);
        while let Some(u) = queue.pop_front() {
            if u == self.end {
                break;
            }
            for &v in &self.adjacency[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![self.end];
        while *path.last().unwrap() != self.start {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }
}

/// A shortest path in the Farey graph from `a` to `b`, endpoints included.
///
/// After normalizing `a` to `∞`, every geodesic lies in the ladder of
/// triangles crossed by the vertical line over the image of `b`; the path is
/// found by breadth-first search on that ladder, whose size is linear in the
/// continued-fraction length.
pub fn farey_geodesic(a: &Slope, b: &Slope) -> Vec<Slope> {
    if a == b {
        return vec![a.clone()];
    }
    let m = Mat2::normalizing(a);
    let ladder = Ladder::build(&m.apply(b));
    let back = m.inverse();
    ladder
        .values(&ladder.shortest_path())
        .iter()
        .map(|v| back.apply(v))
        .collect()
}

/// Distance in the Farey graph: breadth-first search on the same ladder as
/// [`farey_geodesic`].
pub fn farey_distance(a: &Slope, b: &Slope) -> usize {
    if a == b {
        return 0;
    }
    if let Some(d) = machine_distance(a, b) {
        return d;
    }
    let ladder = Ladder::build(&Mat2::normalizing(a).apply(b));
    ladder.shortest_path().len() - 1
}

/// Distance in machine arithmetic when both slopes fit in `i64`. Each
/// convergent edge cuts the ladder, so distances to the convergents obey
/// `d_{k+1} = min(d_k + 1, d_{k-1} + a_k)` with `d(∞) = 0`, `d(c_0) = 1`.
fn machine_distance(a: &Slope, b: &Slope) -> Option<usize> {
    let [p, q, bp, bq] = small([a.p(), a.q(), b.p(), b.q()])?;
    let (s, r) = machine_normalizer(p, q);
    let (mut x, mut y) = (s * bp - r * bq, -q * bp + p * bq);
    if y < 0 {
        (x, y) = (-x, -y);
    }
    let t = x.div_euclid(y);
    (x, y) = (y, x - t * y);
    let (mut before, mut last) = (0i128, 1i128);
    while y != 0 {
        let t = x.div_euclid(y);
        (before, last) = (last, (last + 1).min(before + t));
        (x, y) = (y, x - t * y);
    }
    usize::try_from(last).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn machine_path_matches_big_ladder() {
        let slopes: Vec<Slope> = (-9i64..=9)
            .flat_map(|p| (0i64..=9).filter_map(move |q| Slope::new(p, q).ok()))
            .collect();
        for a in &slopes {
            for b in &slopes {
                if a != b {
                    let big = Ladder::build(&Mat2::normalizing(a).apply(b))
                        .shortest_path()
                        .len()
                        - 1;
                    assert_eq!(farey_distance(a, b), big, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let t = SurfaceKind::Torus1;
        assert_eq!(
            intersection_number(&s("inf"), &s("5/7"), t),
            BigUint::from(7u32)
        );
        assert_eq!(intersection_number(&s("1/2"), &s("1/3"), t), BigUint::one());
        assert_eq!(
            intersection_number(&s("2/5"), &s("3/7"), SurfaceKind::Sphere4),
            BigUint::from(2u32)
        );
        assert!(intersection_number(&s("3/4"), &s("3/4"), t).is_zero());
    }

    #[test]
    fn small_distances() {
        assert_eq!(farey_distance(&s("0/1"), &s("inf")), 1);
        assert_eq!(farey_distance(&s("2/3"), &s("2/3")), 0);
        assert_eq!(farey_distance(&s("1/3"), &s("2/3")), 2);
        assert_eq!(farey_distance(&s("inf"), &s("7/2")), 2);
        // 34/55 = [0;1,1,1,1,1,1,1,2]: alternate convergents give a path of 5.
        assert_eq!(farey_distance(&s("0/1"), &s("34/55")), 5);
    }

    #[test]
    fn geodesics_are_edge_paths() {
        for (a, b) in [
            ("0/1", "34/55"),
            ("-3/7", "100/31"),
            ("inf", "355/113"),
            ("5/8", "inf"),
        ] {
            let path = farey_geodesic(&s(a), &s(b));
            assert_eq!(path.first(), Some(&s(a)));
            assert_eq!(path.last(), Some(&s(b)));
            for w in path.windows(2) {
                assert_eq!(w[0].det(&w[1]).magnitude(), &BigUint::one());
            }
        }
    }
}
