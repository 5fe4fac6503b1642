use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::coloring::{Color, EdgeColoring};
use crate::embed::Embedding;
use crate::graph::{OrderedGraph, Vertex};
use crate::structure::DefiningSequence;

use super::combinators::build_caterpillar;
use super::{invalid, ConstructError};

/// Members found by a bounded enumeration, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEnumeration {
    pub members: Vec<OrderedGraph>,
    /// False when the member bound cut the enumeration short.
    pub complete: bool,
}

/// Placement rules for a union of blocks that may share vertices.
struct MergeRules<'a> {
    blocks: Vec<&'a OrderedGraph>,
    /// `precedes[a][b]`: every vertex of block `a` lies left of block `b`.
    precedes: Vec<Vec<bool>>,
    /// Leftmost vertices strictly increase with the block index.
    pointed: bool,
    /// Vertices placed before the blocks, with edges to block-leftmost
    /// vertices: `(prefix vertex, block)`.
    prefix: usize,
    prefix_edges: Vec<(Vertex, Vertex)>,
    spokes: Vec<(Vertex, usize)>,
}

struct MergeState {
    ptr: Vec<usize>,
    slot: Vec<Vec<Vertex>>,
    next: Vertex,
}

fn merge_all(rules: &MergeRules, limit: usize) -> (BTreeSet<OrderedGraph>, bool) {
    let mut st = MergeState {
        ptr: vec![0; rules.blocks.len()],
        slot: rules.blocks.iter().map(|b| vec![0; b.vertex_count()]).collect(),
        next: rules.prefix,
    };
    let mut out = BTreeSet::new();
    let complete = merge_step(rules, &mut st, limit, &mut out);
    (out, complete)
}

fn merge_step(rules: &MergeRules, st: &mut MergeState, limit: usize, out: &mut BTreeSet<OrderedGraph>) -> bool {
    let nb = rules.blocks.len();
    if (0..nb).all(|b| st.ptr[b] == rules.blocks[b].vertex_count()) {
        let mut edges = rules.prefix_edges.clone();
        for (b, g) in rules.blocks.iter().enumerate() {
            edges.extend(g.edges().iter().map(|&(u, v)| (st.slot[b][u], st.slot[b][v])));
        }
        edges.extend(rules.spokes.iter().map(|&(p, b)| (p, st.slot[b][0])));
        out.insert(OrderedGraph::from_parts(st.next, edges));
        return out.len() < limit;
    }
    let available: Vec<usize> = (0..nb)
        .filter(|&b| {
            st.ptr[b] < rules.blocks[b].vertex_count()
                && (0..nb).all(|a| !rules.precedes[a][b] || st.ptr[a] == rules.blocks[a].vertex_count())
                && !(rules.pointed && b > 0 && st.ptr[b] == 0 && st.ptr[b - 1] == 0)
        })
        .collect();
    for mask in 1u32..(1 << available.len()) {
        let chosen: Vec<usize> = (0..available.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| available[k])
            .collect();
        if rules.pointed && chosen.iter().filter(|&&b| st.ptr[b] == 0).count() > 1 {
            continue;
        }
        let v = st.next;
        st.next += 1;
        for &b in &chosen {
            st.slot[b][st.ptr[b]] = v;
            st.ptr[b] += 1;
        }
        let go_on = merge_step(rules, st, limit, out);
        for &b in &chosen {
            st.ptr[b] -= 1;
        }
        st.next -= 1;
        if !go_on {
            return false;
        }
    }
    true
}

/// Every way of choosing one entry per position from `lists`.
fn choices<T>(lists: &[&[T]]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..l.len()).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out
}

fn collect(parts: Vec<(BTreeSet<OrderedGraph>, bool)>, limit: usize) -> FamilyEnumeration {
    let mut all = BTreeSet::new();
    let mut complete = true;
    for (set, done) in parts {
        complete &= done;
        all.extend(set);
    }
    if all.len() > limit {
        complete = false;
        all = all.into_iter().take(limit).collect();
    }
    FamilyEnumeration {
        members: all.into_iter().collect(),
        complete,
    }
}

/// Unions of one graph per grid cell `(i, j)`, where cell `(i, j)` lies
/// left of `(i, j+1)` and of `(i+1, j)` and other cells may share vertices.
pub fn family_fst(grid: &[Vec<Vec<OrderedGraph>>], limit: usize) -> FamilyEnumeration {
    let cells: Vec<(usize, usize)> = grid
        .iter()
        .enumerate()
        .flat_map(|(i, row)| (0..row.len()).map(move |j| (i, j)))
        .collect();
    let lists: Vec<&[OrderedGraph]> = cells.iter().map(|&(i, j)| grid[i][j].as_slice()).collect();
    let precedes: Vec<Vec<bool>> = cells
        .iter()
        .map(|&(i, j)| {
            cells
                .iter()
                .map(|&(k, l)| i <= k && j <= l && (i, j) != (k, l))
                .collect()
        })
        .collect();
    let parts = choices(&lists)
        .into_par_iter()
        .map(|pick| {
            let rules = MergeRules {
                blocks: pick.iter().zip(&lists).map(|(&k, l)| &l[k]).collect(),
                precedes: precedes.clone(),
                pointed: false,
                prefix: 0,
                prefix_edges: Vec::new(),
                spokes: Vec::new(),
            };
            merge_all(&rules, limit)
        })
        .collect();
    collect(parts, limit)
}

fn check_family_params(s: usize, d: &DefiningSequence) -> Result<(), ConstructError> {
    if s == 0 {
        return Err(invalid("star must have an edge"));
    }
    if d.len() > 2 && !d.is_nondecreasing() {
        return Err(invalid(format!(
            "defining sequence {d} has more than two segments and decreases"
        )));
    }
    Ok(())
}

/// Level `j` of the family whose members force an anchored blue `H_j(d)`
/// under colorings without a red `S_s`.
pub fn family_fj(s: usize, d: &DefiningSequence, j: usize, limit: usize) -> Result<FamilyEnumeration, ConstructError> {
    check_family_params(s, d)?;
    if j == 0 || j > d.len() {
        return Err(invalid(format!("level {j} outside 1..={}", d.len())));
    }
    if j == 1 {
        return Ok(FamilyEnumeration {
            members: vec![OrderedGraph::right_star(s + d.d(1) - 1)],
            complete: true,
        });
    }
    let below = family_fj(s, d, j - 1, limit)?;
    let extra = d.d(j) - 1;
    let lists: Vec<&[OrderedGraph]> = vec![below.members.as_slice(); s];
    let parts = choices(&lists)
        .into_par_iter()
        .map(|pick| {
            let rules = MergeRules {
                blocks: pick.iter().map(|&k| &below.members[k]).collect(),
                precedes: vec![vec![false; s]; s],
                pointed: true,
                prefix: 1 + extra,
                prefix_edges: (1..=extra).map(|z| (0, z)).collect(),
                spokes: (0..s).map(|b| (0, b)).collect(),
            };
            merge_all(&rules, limit)
        })
        .collect();
    let mut fam = collect(parts, limit);
    fam.complete &= below.complete;
    Ok(fam)
}

/// `levels[j][v]`: whether `v` is leftmost in a copy of a level-`j` member,
/// for `0 <= j <= |d|`. Computed from right neighbourhoods without
/// enumerating the family.
pub fn family_levels(f: &OrderedGraph, s: usize, d: &DefiningSequence) -> Vec<Vec<bool>> {
    let n = f.vertex_count();
    let mut levels = vec![vec![true; n]];
    for j in 1..=d.len() {
        let prev = &levels[j - 1];
        let cur = (0..n).map(|u| level_choice(f, prev, u, s, d.d(j)).is_some()).collect();
        levels.push(cur);
    }
    levels
}

/// The `s` rightmost right neighbours of `u` in `prev` and `d - 1` right
/// neighbours left of all of them, if they exist.
fn level_choice(f: &OrderedGraph, prev: &[bool], u: Vertex, s: usize, d: usize) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let right = f.right_neighbors(u);
    let inside: Vec<Vertex> = right.iter().copied().filter(|&v| prev[v]).collect();
    if inside.len() < s {
        return None;
    }
    let tops = inside[inside.len() - s..].to_vec();
    let before: Vec<Vertex> = right.iter().copied().filter(|&z| z < tops[0]).take(d - 1).collect();
    (before.len() == d - 1).then_some((before, tops))
}

/// A level-`j` member copy with leftmost vertex `u`, as the member graph and
/// its embedding into `f`.
pub fn family_member_witness(
    f: &OrderedGraph,
    s: usize,
    d: &DefiningSequence,
    j: usize,
    u: Vertex,
) -> Option<(OrderedGraph, Embedding)> {
    let levels = family_levels(f, s, d);
    if j == 0 || j > d.len() || !levels[j][u] {
        return None;
    }
    let mut edges = BTreeSet::new();
    let mut vertices = BTreeSet::new();
    collect_witness(f, s, d, &levels, j, u, &mut edges, &mut vertices);
    let vs: Vec<Vertex> = vertices.into_iter().collect();
    let pos = |v: Vertex| vs.binary_search(&v).unwrap();
    let g = OrderedGraph::from_parts(vs.len(), edges.iter().map(|&(a, b)| (pos(a), pos(b))).collect());
    Some((g, Embedding(vs)))
}

#[allow(clippy::too_many_arguments)]
fn collect_witness(
    f: &OrderedGraph,
    s: usize,
    d: &DefiningSequence,
    levels: &[Vec<bool>],
    j: usize,
    u: Vertex,
    edges: &mut BTreeSet<(Vertex, Vertex)>,
    vertices: &mut BTreeSet<Vertex>,
) {
    vertices.insert(u);
    if j == 0 {
        return;
    }
    let (before, tops) = level_choice(f, &levels[j - 1], u, s, d.d(j)).expect("u is on this level");
    for &z in &before {
        vertices.insert(z);
        edges.insert((u, z));
    }
    for &w in &tops {
        edges.insert((u, w));
        collect_witness(f, s, d, levels, j - 1, w, edges, vertices);
    }
}

fn neighbours_between(f: &OrderedGraph, u: Vertex, v: Vertex) -> usize {
    f.right_neighbors(u).iter().filter(|&&z| z < v).count()
}

/// Which canonical coloring to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalVariant {
    /// Red iff `h(u) <= h(v)` and `u` has `d_{h(u)+1} - 1` right neighbours
    /// before `v`. Needs `d` nondecreasing.
    Levels,
    /// The three-step coloring for two segments.
    ThreeStep,
}

/// A coloring of `f` with no red `S_s` and no blue `H_i(d)`, provided `f`
/// has no top-level family member. Picks the level coloring when `d` is
/// nondecreasing and the three-step coloring otherwise.
pub fn canonical_h_coloring(f: &OrderedGraph, s: usize, d: &DefiningSequence) -> Result<EdgeColoring, ConstructError> {
    let variant = if d.is_nondecreasing() {
        CanonicalVariant::Levels
    } else {
        CanonicalVariant::ThreeStep
    };
    canonical_h_coloring_with(f, s, d, variant)
}

pub fn canonical_h_coloring_with(
    f: &OrderedGraph,
    s: usize,
    d: &DefiningSequence,
    variant: CanonicalVariant,
) -> Result<EdgeColoring, ConstructError> {
    check_family_params(s, d)?;
    let i = d.len();
    match variant {
        CanonicalVariant::Levels if !d.is_nondecreasing() => {
            return Err(invalid("the level coloring needs a nondecreasing sequence"))
        }
        CanonicalVariant::ThreeStep if i != 2 => return Err(invalid("the three-step coloring needs two segments")),
        _ => {}
    }
    let levels = family_levels(f, s, d);
    if let Some(u) = (0..f.vertex_count()).find(|&u| levels[i][u]) {
        let (_, witness) = family_member_witness(f, s, d, i, u).expect("u is on the top level");
        return Err(ConstructError::ContainsFamilyMember {
            level: i,
            vertex: u,
            embedding: witness.0,
        });
    }
    let mut colors = vec![Color::Blue; f.edge_count()];
    match variant {
        CanonicalVariant::Levels => {
            let h: Vec<usize> = (0..f.vertex_count())
                .map(|u| (0..=i).rev().find(|&j| levels[j][u]).unwrap())
                .collect();
            for (k, &(u, v)) in f.edges().iter().enumerate() {
                if h[u] <= h[v] && neighbours_between(f, u, v) + 1 >= d.d(h[u] + 1) {
                    colors[k] = Color::Red;
                }
            }
        }
        CanonicalVariant::ThreeStep => {
            for u in 0..f.vertex_count() {
                let right = f.right_neighbors(u);
                let mut red = 0;
                for &v in right {
                    if levels[1][v] && neighbours_between(f, u, v) + 1 >= d.d(2) {
                        colors[f.edge_index(u, v).unwrap()] = Color::Red;
                        red += 1;
                    }
                }
                for &v in right.iter().rev() {
                    if red >= (s - 1).min(right.len()) {
                        break;
                    }
                    let k = f.edge_index(u, v).unwrap();
                    if colors[k] == Color::Blue {
                        colors[k] = Color::Red;
                        red += 1;
                    }
                }
            }
        }
    }
    let coloring = EdgeColoring::new(f.clone(), colors).expect("aligned colors");
    coloring
        .check_avoids(&OrderedGraph::right_star(s), &build_caterpillar(d))
        .map_err(|v| ConstructError::VerificationFailed(format!("{:?} copy at {:?}", v.color, v.embedding.0)))?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrow::does_arrow;
    use crate::embed::contains;
    use crate::search::SearchOptions;

    fn seq(d: &[usize]) -> DefiningSequence {
        DefiningSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn first_level_is_one_star() {
        let fam = family_fj(2, &seq(&[2]), 1, 100).unwrap();
        assert_eq!(fam.members, vec![OrderedGraph::right_star(3)]);
    }

    #[test]
    fn second_level_members_arrow() {
        let d = seq(&[1, 1]);
        let fam = family_fj(2, &d, 2, 1000).unwrap();
        assert!(fam.complete);
        assert!(!fam.members.is_empty());
        let p3 = OrderedGraph::monotone_path(3);
        let s2 = OrderedGraph::right_star(2);
        for m in &fam.members {
            assert_eq!(m.right_neighbors(0).len(), 2);
            assert!(does_arrow(m, &s2, &p3, &SearchOptions::default()).unwrap(), "{m}");
            assert!(family_levels(m, 2, &d)[2][0]);
        }
    }

    #[test]
    fn witness_is_a_member() {
        let d = seq(&[1, 1]);
        let fam = family_fj(2, &d, 2, 1000).unwrap();
        let host = OrderedGraph::parse_inline("n=7;e=1-2,1-3,2-4,2-5,3-6,3-7,4-5").unwrap();
        let (g, emb) = family_member_witness(&host, 2, &d, 2, 0).unwrap();
        assert!(fam.members.contains(&g));
        assert!(contains(&host, &g));
        assert_eq!(emb.0[0], 0);
    }

    #[test]
    fn canonical_coloring_on_small_star() {
        let d = seq(&[2]);
        canonical_h_coloring(&OrderedGraph::right_star(2), 2, &d).unwrap();
        let err = canonical_h_coloring(&OrderedGraph::right_star(3), 2, &d).unwrap_err();
        assert!(matches!(
            err,
            ConstructError::ContainsFamilyMember {
                level: 1,
                vertex: 0,
                ..
            }
        ));
    }

    #[test]
    fn pointed_order_is_respected() {
        let fam = family_fj(2, &seq(&[1, 1]), 2, 1000).unwrap();
        for m in &fam.members {
            let r = m.right_neighbors(0);
            assert!(r[0] < r[1]);
        }
    }

    #[test]
    fn grid_union_keeps_order() {
        let k2 = OrderedGraph::complete(2);
        let grid = vec![vec![vec![k2.clone()]]];
        assert_eq!(family_fst(&grid, 10).members, vec![k2.clone()]);
        let m = OrderedGraph::parse_inline("n=4;e=1-2,3-4").unwrap();
        let cell = vec![k2.clone()];
        let grid = vec![vec![cell.clone(), cell.clone()], vec![cell.clone(), cell]];
        let fam = family_fst(&grid, 10_000);
        assert!(fam.complete);
        for g in &fam.members {
            assert!(does_arrow(g, &m, &m, &SearchOptions::default()).unwrap(), "{g}");
        }
    }
}
