//! Route resolution and fixed empty-travel legs.
//!
//! Declared routes are chains of link ids; resolution orients each link
//! (spurs may be ridden in reverse, trunks only forward) and pins the
//! origin/destination stations. Empty repositioning legs between stations
//! are precomputed once per network by shortest path over the same links
//! and are fixed thereafter — AGVs never reroute dynamically.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{
    CartState, LayoutError, LinkId, LinkKind, NetworkSpec, NodeId, RouteSpec, StationId, Variant,
};

/// Traversal direction of a link relative to its declared `from -> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// A traversable chain of oriented links between two stations.
#[derive(Debug, Clone)]
pub struct ResolvedRoute {
    pub cart_state: Option<CartState>,
    pub links: Vec<(LinkId, Direction)>,
    pub origin: StationId,
    pub destination: StationId,
    pub lookahead: Option<(LinkId, u32)>,
    pub length_ft: f64,
}

fn orient(
    spec: &NetworkSpec,
    link: LinkId,
    cursor: NodeId,
) -> Result<(Direction, NodeId), String> {
    let l = spec.link(link);
    if l.from == cursor {
        Ok((Direction::Forward, l.to))
    } else if l.to == cursor && l.kind == LinkKind::Spur {
        Ok((Direction::Reverse, l.from))
    } else if l.to == cursor {
        Err(format!(
            "link {} is a one-way trunk and cannot be ridden {} -> {}",
            l.name,
            spec.node_name(l.to),
            spec.node_name(l.from)
        ))
    } else {
        Err(format!(
            "route discontinuity: link {} does not touch node {}",
            l.name,
            spec.node_name(cursor)
        ))
    }
}

/// Orients a declared route and checks continuity, endpoints and the
/// look-ahead stop. The same walk underlies validation and engine setup.
pub fn resolve_route(spec: &NetworkSpec, route: &RouteSpec) -> Result<ResolvedRoute, String> {
    if route.links.is_empty() {
        return Err("route has no links".into());
    }
    // The origin is whichever endpoint of the first link hosts a station,
    // preferring the orientation that keeps the chain contiguous.
    let first = spec.link(route.links[0]);
    let start_candidates = [first.from, first.to];
    let mut resolved: Option<ResolvedRoute> = None;
    let mut last_err = String::new();
    for start in start_candidates {
        let Some(origin) = spec.station_at(start) else {
            continue;
        };
        match walk(spec, route, start) {
            Ok((links, end, length_ft)) => {
                let Some(dest) = spec.station_at(end) else {
                    last_err = format!(
                        "route ends at node {} which has no station",
                        spec.node_name(end)
                    );
                    continue;
                };
                resolved = Some(ResolvedRoute {
                    cart_state: Some(route.cart_state),
                    links,
                    origin: origin.id,
                    destination: dest.id,
                    lookahead: route.lookahead,
                    length_ft,
                });
                break;
            }
            Err(e) => last_err = e,
        }
    }
    let resolved = resolved.ok_or_else(|| {
        if last_err.is_empty() {
            "route does not start at a station node".to_string()
        } else {
            last_err
        }
    })?;
    if let Some((link, zone)) = route.lookahead {
        if !resolved.links.iter().any(|&(l, _)| l == link) {
            return Err(format!(
                "lookahead stop references link {} which is not on the route",
                spec.link(link).name
            ));
        }
        if zone >= spec.link(link).zone_count() {
            return Err(format!(
                "lookahead zone {zone} out of range for link {} ({} zones)",
                spec.link(link).name,
                spec.link(link).zone_count()
            ));
        }
    }
    Ok(resolved)
}

fn walk(
    spec: &NetworkSpec,
    route: &RouteSpec,
    start: NodeId,
) -> Result<(Vec<(LinkId, Direction)>, NodeId, f64), String> {
    let mut cursor = start;
    let mut links = Vec::with_capacity(route.links.len());
    let mut length_ft = 0.0;
    for &link in &route.links {
        let (dir, next) = orient(spec, link, cursor)?;
        links.push((link, dir));
        length_ft += spec.link(link).length_ft;
        cursor = next;
    }
    Ok((links, cursor, length_ft))
}

/// Fixed shortest legs between every ordered pair of stations, used for
/// empty repositioning and nearest-idle dispatch distances.
#[derive(Debug, Clone)]
pub struct PathTable {
    station_count: usize,
    legs: Vec<Option<ResolvedRoute>>,
}

impl PathTable {
    pub fn build(spec: &NetworkSpec) -> PathTable {
        let n = spec.stations.len();
        let mut legs = Vec::with_capacity(n * n);
        for from in 0..n {
            let tree = shortest_tree(spec, spec.stations[from].node);
            for to in 0..n {
                if from == to {
                    legs.push(Some(ResolvedRoute {
                        cart_state: None,
                        links: Vec::new(),
                        origin: StationId(from as u32),
                        destination: StationId(to as u32),
                        lookahead: None,
                        length_ft: 0.0,
                    }));
                    continue;
                }
                legs.push(extract_leg(
                    spec,
                    &tree,
                    StationId(from as u32),
                    StationId(to as u32),
                ));
            }
        }
        PathTable {
            station_count: n,
            legs,
        }
    }

    pub fn leg(&self, from: StationId, to: StationId) -> Option<&ResolvedRoute> {
        self.legs[from.index() * self.station_count + to.index()].as_ref()
    }

    pub fn distance_ft(&self, from: StationId, to: StationId) -> Option<f64> {
        self.leg(from, to).map(|l| l.length_ft)
    }
}

#[derive(Clone, Copy)]
struct TreeEntry {
    dist: f64,
    via: Option<(NodeId, LinkId, Direction)>,
}

/// Deterministic Dijkstra over the directed link graph (trunks one-way,
/// spurs both ways). Ties broken by node index, then link declaration order.
fn shortest_tree(spec: &NetworkSpec, source: NodeId) -> Vec<TreeEntry> {
    let n = spec.nodes.len();
    let mut entries = vec![
        TreeEntry {
            dist: f64::INFINITY,
            via: None,
        };
        n
    ];
    entries[source.index()].dist = 0.0;
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::new();
    heap.push(Reverse((0, source.0)));
    while let Some(Reverse((dist_bits, node))) = heap.pop() {
        let dist = f64::from_bits(dist_bits);
        let node_id = NodeId(node);
        if dist > entries[node_id.index()].dist {
            continue;
        }
        for link in &spec.links {
            let step = if link.from == node_id {
                Some((link.to, Direction::Forward))
            } else if link.to == node_id && link.kind == LinkKind::Spur {
                Some((link.from, Direction::Reverse))
            } else {
                None
            };
            if let Some((next, dir)) = step {
                let cand = dist + link.length_ft;
                if cand + 1e-12 < entries[next.index()].dist {
                    entries[next.index()] = TreeEntry {
                        dist: cand,
                        via: Some((node_id, link.id, dir)),
                    };
                    // f64 distances are non-negative, so the bit pattern
                    // orders identically to the value.
                    heap.push(Reverse((cand.to_bits(), next.0)));
                }
            }
        }
    }
    entries
}

fn extract_leg(
    spec: &NetworkSpec,
    tree: &[TreeEntry],
    from: StationId,
    to: StationId,
) -> Option<ResolvedRoute> {
    let target = spec.stations[to.index()].node;
    if !tree[target.index()].dist.is_finite() {
        return None;
    }
    let mut links = Vec::new();
    let mut cursor = target;
    while let Some((prev, link, dir)) = tree[cursor.index()].via {
        links.push((link, dir));
        cursor = prev;
    }
    links.reverse();
    Some(ResolvedRoute {
        cart_state: None,
        links,
        origin: from,
        destination: to,
        lookahead: None,
        length_ft: tree[target.index()].dist,
    })
}

#[cfg(test)]
mod unit {
    use super::*;
    use crate::layout::parse_layout;

    const Y_NETWORK: &str = r#"
        [[node]]
        id = "md"
        [[node]]
        id = "mid"
        [[node]]
        id = "ccsa"
        [[node]]
        id = "park"

        [[link]]
        id = "spur_md"
        from = "md"
        to = "mid"
        length_ft = 9.0
        kind = "spur"

        [[link]]
        id = "main"
        from = "mid"
        to = "ccsa"
        length_ft = 30.0
        kind = "trunk"

        [[link]]
        id = "back"
        from = "ccsa"
        to = "mid"
        length_ft = 30.0
        kind = "trunk"

        [[link]]
        id = "spur_park"
        from = "mid"
        to = "park"
        length_ft = 6.0
        kind = "spur"

        [[station]]
        id = "MD"
        node = "md"
        kind = "MD"
        detent_capacity = 2

        [[station]]
        id = "CCSA"
        node = "ccsa"
        kind = "CCSA"
        detent_capacity = 2

        [[station]]
        id = "PARK"
        node = "park"
        kind = "PARKING"
        detent_capacity = 8

        [[route]]
        cart_state = "clean"
        variant = "M"
        links = ["spur_md", "main"]
    "#;

    #[test]
    fn route_resolves_with_spur_start() {
        let spec = parse_layout(Y_NETWORK).unwrap();
        let r = resolve_route(&spec, &spec.routes[0]).unwrap();
        assert_eq!(spec.station(r.origin).name, "MD");
        assert_eq!(spec.station(r.destination).name, "CCSA");
        assert_eq!(r.links[0].1, Direction::Forward);
        assert!((r.length_ft - 39.0).abs() < 1e-12);
    }

    #[test]
    fn trunk_cannot_be_reversed() {
        let spec = parse_layout(Y_NETWORK).unwrap();
        let mut bad = spec.routes[0].clone();
        bad.links = vec![LinkId(0), LinkId(1), LinkId(1)];
        let err = resolve_route(&spec, &bad).unwrap_err();
        assert!(err.contains("one-way trunk"), "{err}");
    }

    #[test]
    fn path_table_uses_reverse_spurs() {
        let spec = parse_layout(Y_NETWORK).unwrap();
        let table = PathTable::build(&spec);
        // park -> md: reverse park spur then reverse md spur.
        let leg = table
            .leg(
                spec.station_named("PARK").unwrap().id,
                spec.station_named("MD").unwrap().id,
            )
            .unwrap();
        assert_eq!(leg.links.len(), 2);
        assert_eq!(leg.links[0].1, Direction::Reverse);
        assert_eq!(leg.links[1].1, Direction::Reverse);
        assert!((leg.length_ft - 15.0).abs() < 1e-12);
        // ccsa -> md goes via the `back` trunk.
        let leg = table
            .leg(
                spec.station_named("CCSA").unwrap().id,
                spec.station_named("MD").unwrap().id,
            )
            .unwrap();
        assert!((leg.length_ft - 39.0).abs() < 1e-12);
    }
}
