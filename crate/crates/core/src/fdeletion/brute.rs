use crate::error::{Error, Result};
use crate::graph::{is_family_minor_free, Graph, Vertex, VertexSet};

use super::Family;

pub const BRUTE_FORCE_CAP: usize = 12;

/// Calls `visit` on every `size`-subset of `items` in lexicographic order
/// until it returns `true`.
pub(crate) fn for_each_subset<F>(items: &[Vertex], size: usize, mut visit: F) -> Result<bool>
where
    F: FnMut(&VertexSet) -> Result<bool>,
{
    fn rec<F>(
        items: &[Vertex],
        size: usize,
        from: usize,
        cur: &mut Vec<Vertex>,
        visit: &mut F,
    ) -> Result<bool>
    where
        F: FnMut(&VertexSet) -> Result<bool>,
    {
        if cur.len() == size {
            return visit(&cur.iter().copied().collect());
        }
        let need = size - cur.len();
        if items.len() < from + need {
            return Ok(false);
        }
        for i in from..=items.len() - need {
            cur.push(items[i]);
            if rec(items, size, i + 1, cur, visit)? {
                return Ok(true);
            }
            cur.pop();
        }
        Ok(false)
    }
    rec(items, size, 0, &mut Vec::new(), &mut visit)
}

/// Minimum deletion set avoiding `forbidden` with at most `k` vertices, by
/// subset enumeration in increasing size.
pub fn f_deletion_brute_force(
    g: &Graph,
    f: &Family,
    k: usize,
    forbidden: &VertexSet,
) -> Result<Option<VertexSet>> {
    if g.n() > BRUTE_FORCE_CAP {
        return Err(Error::BruteForceTooLarge {
            size: g.n(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    brute_force_within(g, f, k, forbidden)
}

/// Same search without the size cap, for callers that bound the candidate
/// set themselves.
pub(crate) fn brute_force_within(
    g: &Graph,
    f: &Family,
    k: usize,
    forbidden: &VertexSet,
) -> Result<Option<VertexSet>> {
    let candidates: Vec<Vertex> = g.vertices().filter(|v| !forbidden.contains(v)).collect();
    let mut found = None;
    for size in 0..=k.min(candidates.len()) {
        let hit = for_each_subset(&candidates, size, |s| {
            if is_family_minor_free(&g.without(s), &f.patterns)? {
                found = Some(s.clone());
                return Ok(true);
            }
            Ok(false)
        })?;
        if hit {
            break;
        }
    }
    Ok(found)
}
