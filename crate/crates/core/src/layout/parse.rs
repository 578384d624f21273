//! Layout-file parsing. The file is TOML with array-of-table sections
//! `[[node]]`, `[[link]]`, `[[station]]`, `[[elevator]]` and `[[route]]`;
//! unknown keys are rejected.

use std::collections::HashMap;

use serde::Deserialize;

use super::{
    CartState, Elevator, ElevatorId, LayoutError, Link, LinkId, LinkKind, NetworkSpec, NodeId,
    RouteSpec, Station, StationId, StationKind, Variant, DEFAULT_DOOR_DELAY_S,
    DEFAULT_ZONE_LENGTH_FT,
};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLayout {
    #[serde(default)]
    node: Vec<RawNode>,
    #[serde(default)]
    link: Vec<RawLink>,
    #[serde(default)]
    station: Vec<RawStation>,
    #[serde(default)]
    elevator: Vec<RawElevator>,
    #[serde(default)]
    route: Vec<RawRoute>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    id: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLink {
    id: String,
    from: String,
    to: String,
    length_ft: f64,
    kind: String,
    zone_length_ft: Option<f64>,
    turning: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStation {
    id: String,
    node: String,
    kind: String,
    detent_capacity: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElevator {
    id: String,
    node: String,
    agv_capacity: u32,
    door_delay_s: Option<f64>,
    serves: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRoute {
    cart_state: String,
    variant: String,
    links: Vec<String>,
    lookahead: Option<String>,
}

fn cart_state(text: &str) -> Result<CartState, LayoutError> {
    match text {
        "clean" => Ok(CartState::Clean),
        "soiled" => Ok(CartState::Soiled),
        "washed" => Ok(CartState::Washed),
        other => Err(LayoutError::UnknownRef {
            kind: "cart state",
            id: other.to_string(),
        }),
    }
}

fn station_kind(text: &str) -> Result<StationKind, LayoutError> {
    match text {
        "MD" => Ok(StationKind::Md),
        "CSSD" => Ok(StationKind::Cssd),
        "CCSA" => Ok(StationKind::Ccsa),
        "SCSA" => Ok(StationKind::Scsa),
        "OR_CORE" => Ok(StationKind::OrCore),
        "PARKING" => Ok(StationKind::Parking),
        other => Err(LayoutError::UnknownRef {
            kind: "station kind",
            id: other.to_string(),
        }),
    }
}

/// Parses layout-file text into an id-resolved [`NetworkSpec`] with defaults
/// applied (3 ft zones, 11 s door delays). The active variant starts as M.
pub fn parse_layout(text: &str) -> Result<NetworkSpec, LayoutError> {
    let raw: RawLayout =
        toml::from_str(text).map_err(|e| LayoutError::Syntax(e.to_string().replace('\n', " ")))?;

    let mut node_ids: HashMap<String, NodeId> = HashMap::new();
    let mut nodes = Vec::new();
    for n in &raw.node {
        if node_ids.contains_key(&n.id) {
            return Err(LayoutError::DuplicateId {
                kind: "node",
                id: n.id.clone(),
            });
        }
        node_ids.insert(n.id.clone(), NodeId(nodes.len() as u32));
        nodes.push(n.id.clone());
    }
    let lookup_node = |id: &str| -> Result<NodeId, LayoutError> {
        node_ids
            .get(id)
            .copied()
            .ok_or_else(|| LayoutError::UnknownNode(id.to_string()))
    };

    let mut link_ids: HashMap<String, LinkId> = HashMap::new();
    let mut links = Vec::new();
    for l in &raw.link {
        if link_ids.contains_key(&l.id) {
            return Err(LayoutError::DuplicateId {
                kind: "link",
                id: l.id.clone(),
            });
        }
        let check_positive = |field: &'static str, value: f64| -> Result<f64, LayoutError> {
            if value > 0.0 && value.is_finite() {
                Ok(value)
            } else {
                Err(LayoutError::InvalidField {
                    entity: "link",
                    id: l.id.clone(),
                    field,
                    reason: format!("must be positive, got {value}"),
                })
            }
        };
        let kind = match l.kind.as_str() {
            "trunk" => LinkKind::Trunk,
            "spur" => LinkKind::Spur,
            other => {
                return Err(LayoutError::InvalidField {
                    entity: "link",
                    id: l.id.clone(),
                    field: "kind",
                    reason: format!("expected trunk or spur, got `{other}`"),
                })
            }
        };
        let id = LinkId(links.len() as u32);
        link_ids.insert(l.id.clone(), id);
        links.push(Link {
            id,
            name: l.id.clone(),
            from: lookup_node(&l.from)?,
            to: lookup_node(&l.to)?,
            length_ft: check_positive("length_ft", l.length_ft)?,
            kind,
            zone_length_ft: check_positive(
                "zone_length_ft",
                l.zone_length_ft.unwrap_or(DEFAULT_ZONE_LENGTH_FT),
            )?,
            turning: l.turning.unwrap_or(false),
        });
    }
    let lookup_link = |id: &str| -> Result<LinkId, LayoutError> {
        link_ids
            .get(id)
            .copied()
            .ok_or_else(|| LayoutError::UnknownLink(id.to_string()))
    };

    let mut station_names: HashMap<String, StationId> = HashMap::new();
    let mut stations = Vec::new();
    for s in &raw.station {
        if station_names.contains_key(&s.id) {
            return Err(LayoutError::DuplicateId {
                kind: "station",
                id: s.id.clone(),
            });
        }
        station_names.insert(s.id.clone(), StationId(stations.len() as u32));
        stations.push(Station {
            id: StationId(stations.len() as u32),
            name: s.id.clone(),
            node: lookup_node(&s.node)?,
            kind: station_kind(&s.kind)?,
            detent_capacity: s.detent_capacity,
        });
    }

    let mut elevator_names: HashMap<String, ElevatorId> = HashMap::new();
    let mut elevators = Vec::new();
    for e in &raw.elevator {
        if elevator_names.contains_key(&e.id) {
            return Err(LayoutError::DuplicateId {
                kind: "elevator",
                id: e.id.clone(),
            });
        }
        elevator_names.insert(e.id.clone(), ElevatorId(elevators.len() as u32));
        elevators.push(Elevator {
            id: ElevatorId(elevators.len() as u32),
            name: e.id.clone(),
            node: lookup_node(&e.node)?,
            agv_capacity: e.agv_capacity,
            door_delay_s: e.door_delay_s.unwrap_or(DEFAULT_DOOR_DELAY_S),
            serves: e
                .serves
                .iter()
                .map(|s| cart_state(s))
                .collect::<Result<_, _>>()?,
        });
    }

    let mut routes = Vec::new();
    for r in &raw.route {
        let state = cart_state(&r.cart_state)?;
        let variant: Variant = r
            .variant
            .parse()
            .map_err(|e: String| LayoutError::UnknownRef {
                kind: "variant",
                id: e,
            })?;
        let link_seq = r
            .links
            .iter()
            .map(|l| lookup_link(l))
            .collect::<Result<Vec<_>, _>>()?;
        let lookahead = match &r.lookahead {
            None => None,
            Some(text) => {
                let (link, zone) =
                    text.split_once(':')
                        .ok_or_else(|| LayoutError::InvalidField {
                            entity: "route",
                            id: format!("{}/{}", r.cart_state, r.variant),
                            field: "lookahead",
                            reason: "expected `link:zone`".into(),
                        })?;
                let zone: u32 = zone.parse().map_err(|_| LayoutError::InvalidField {
                    entity: "route",
                    id: format!("{}/{}", r.cart_state, r.variant),
                    field: "lookahead",
                    reason: format!("`{zone}` is not a zone index"),
                })?;
                Some((lookup_link(link)?, zone))
            }
        };
        routes.push(RouteSpec {
            cart_state: state,
            variant,
            links: link_seq,
            lookahead,
        });
    }

    Ok(NetworkSpec {
        nodes,
        links,
        stations,
        elevators,
        routes,
        variant: Variant::M,
    })
}

#[cfg(test)]
mod unit {
    use super::*;

    const MINIMAL: &str = r#"
        [[node]]
        id = "a"
        [[node]]
        id = "b"

        [[link]]
        id = "ab"
        from = "a"
        to = "b"
        length_ft = 10.0
        kind = "trunk"

        [[station]]
        id = "origin"
        node = "a"
        kind = "MD"
        detent_capacity = 2

        [[station]]
        id = "dest"
        node = "b"
        kind = "CCSA"
        detent_capacity = 2
    "#;

    #[test]
    fn minimal_network_parses_with_defaults() {
        let spec = parse_layout(MINIMAL).unwrap();
        assert_eq!(spec.links.len(), 1);
        assert_eq!(spec.links[0].zone_length_ft, 3.0);
        // ceil(10 / 3) = 4 zones, last one 1 ft long.
        assert_eq!(spec.links[0].zone_count(), 4);
        assert!((spec.links[0].zone_span_ft(3) - 1.0).abs() < 1e-12);
        assert_eq!(spec.stations.len(), 2);
    }

    #[test]
    fn unknown_node_is_reported_by_name() {
        let text = MINIMAL.replace("to = \"b\"", "to = \"X9\"");
        let err = parse_layout(&text).unwrap_err();
        assert_eq!(err.to_string(), "unknown node X9");
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = format!("{MINIMAL}\n[[link]]\nid = \"zz\"\nfrom = \"a\"\nto = \"b\"\nlength_ft = 1.0\nkind = \"trunk\"\ncolor = \"red\"\n");
        let err = parse_layout(&text).unwrap_err();
        assert!(err.to_string().contains("unknown field"), "{err}");
    }

    #[test]
    fn syntax_error_carries_line_number() {
        let err = parse_layout("[[node]]\nid = = \"a\"\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn duplicate_ids_rejected() {
        let text = format!("{MINIMAL}\n[[node]]\nid = \"a\"\n");
        let err = parse_layout(&text).unwrap_err();
        assert!(matches!(err, LayoutError::DuplicateId { kind: "node", .. }));
    }
}
