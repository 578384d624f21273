//! Network validation: invariant violations are report entries, not errors.

use std::collections::HashMap;

use super::{
    resolve_route, CartState, LinkKind, NetworkSpec, PathTable, StationKind, Variant,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationIssue {
    pub code: &'static str,
    pub message: String,
}

#[derive(Debug, Default, Clone)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    fn push(&mut self, code: &'static str, message: String) {
        self.issues.push(ValidationIssue { code, message });
    }
}

/// Checks the structural invariants of a parsed network. An empty report
/// means the network is usable by the engine.
pub fn validate_network(spec: &NetworkSpec) -> ValidationReport {
    let mut report = ValidationReport::default();

    for link in &spec.links {
        if link.length_ft <= 0.0 {
            report.push("bad_length", format!("link {} has non-positive length", link.name));
        }
        if link.zone_length_ft <= 0.0 {
            report.push(
                "bad_zone_length",
                format!("link {} has non-positive zone length", link.name),
            );
        }
        // Zone partition sanity: covers the link, no zone longer than nominal.
        let n = link.zone_count();
        let total: f64 = (0..n).map(|z| link.zone_span_ft(z)).sum();
        if total + 1e-9 < link.length_ft {
            report.push(
                "zone_partition",
                format!("link {} zones do not cover its length", link.name),
            );
        }
    }

    for station in &spec.stations {
        if station.kind != StationKind::Parking && station.detent_capacity == 0 {
            report.push(
                "no_detents",
                format!("station {} has zero detent capacity", station.name),
            );
        }
    }

    for elevator in &spec.elevators {
        if elevator.agv_capacity == 0 {
            report.push(
                "elevator_capacity",
                format!("elevator {} has zero AGV capacity", elevator.name),
            );
        }
        if elevator.door_delay_s < 0.0 {
            report.push(
                "door_delay",
                format!("elevator {} has a negative door delay", elevator.name),
            );
        }
    }

    // Exactly one route per (cart state, variant) pair.
    let mut counts: HashMap<(CartState, Variant), u32> = HashMap::new();
    for route in &spec.routes {
        *counts.entry((route.cart_state, route.variant)).or_default() += 1;
    }
    for variant in [Variant::M, Variant::S] {
        for state in CartState::ALL {
            match counts.get(&(state, variant)).copied().unwrap_or(0) {
                0 => report.push(
                    "missing_route",
                    format!("no route declared for {state} carts under variant {variant}"),
                ),
                1 => {}
                n => report.push(
                    "duplicate_route",
                    format!("{n} routes declared for {state} carts under variant {variant}"),
                ),
            }
        }
    }

    for route in &spec.routes {
        if let Err(reason) = resolve_route(spec, route) {
            report.push(
                "route_discontinuity",
                format!(
                    "route {}/{}: {reason}",
                    route.cart_state, route.variant
                ),
            );
        }
    }

    // Connectivity: every station reachable from every other over the link
    // union (trunks directed, spurs bidirectional).
    let table = PathTable::build(spec);
    for from in &spec.stations {
        for to in &spec.stations {
            if from.id != to.id && table.leg(from.id, to.id).is_none() {
                report.push(
                    "unreachable",
                    format!("station {} cannot reach station {}", from.name, to.name),
                );
            }
        }
    }

    // Spur sharing across routes is allowed (capacity enforced at runtime),
    // but a spur inside the middle of a trunk chain is suspicious.
    for route in &spec.routes {
        if route.links.len() >= 3 {
            for &link in &route.links[1..route.links.len() - 1] {
                if spec.link(link).kind == LinkKind::Spur
                    && spec.station_at(spec.link(link).from).is_none()
                    && spec.station_at(spec.link(link).to).is_none()
                {
                    report.push(
                        "interior_spur",
                        format!(
                            "route {}/{} passes through interior spur {}",
                            route.cart_state,
                            route.variant,
                            spec.link(link).name
                        ),
                    );
                }
            }
        }
    }

    report
}
