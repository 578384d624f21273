//! The guided-path network: nodes, zoned links, stations, elevators and the
//! fixed routes per cart state, with the baseline (M) and elevator-swapped
//! (S) variants.

mod parse;
mod paths;
mod validate;

pub use parse::parse_layout;
pub use paths::{resolve_route, Direction, PathTable, ResolvedRoute};
pub use validate::{validate_network, ValidationIssue, ValidationReport};

use std::fmt;

use thiserror::Error;

pub const DEFAULT_ZONE_LENGTH_FT: f64 = 3.0;
pub const DEFAULT_DOOR_DELAY_S: f64 = 11.0;

macro_rules! index_id {
    ($name:ident) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub u32);

        impl $name {
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }
    };
}

index_id!(NodeId);
index_id!(LinkId);
index_id!(StationId);
index_id!(ElevatorId);

/// Which lifecycle leg a cart is on; selects the route it rides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartState {
    Clean,
    Soiled,
    Washed,
}

impl CartState {
    pub const ALL: [CartState; 3] = [CartState::Clean, CartState::Soiled, CartState::Washed];

    pub fn name(self) -> &'static str {
        match self {
            CartState::Clean => "clean",
            CartState::Soiled => "soiled",
            CartState::Washed => "washed",
        }
    }
}

impl fmt::Display for CartState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Layout variant: baseline elevator roles (M) or swapped (S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    M,
    S,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::M => f.write_str("M"),
            Variant::S => f.write_str("S"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M" | "m" => Ok(Variant::M),
            "S" | "s" => Ok(Variant::S),
            other => Err(format!("unknown variant `{other}` (expected M or S)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkKind {
    Trunk,
    Spur,
}

/// One guide-path segment, partitioned into fixed-length control zones.
#[derive(Debug, Clone)]
pub struct Link {
    pub id: LinkId,
    pub name: String,
    pub from: NodeId,
    pub to: NodeId,
    pub length_ft: f64,
    pub kind: LinkKind,
    pub zone_length_ft: f64,
    pub turning: bool,
}

impl Link {
    pub fn zone_count(&self) -> u32 {
        (self.length_ft / self.zone_length_ft).ceil().max(1.0) as u32
    }

    /// Physical length of one zone; the final zone absorbs the remainder.
    pub fn zone_span_ft(&self, zone: u32) -> f64 {
        let n = self.zone_count();
        debug_assert!(zone < n);
        if zone + 1 == n {
            self.length_ft - self.zone_length_ft * (n - 1) as f64
        } else {
            self.zone_length_ft
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StationKind {
    Md,
    Cssd,
    Ccsa,
    Scsa,
    OrCore,
    Parking,
}

impl StationKind {
    pub fn name(self) -> &'static str {
        match self {
            StationKind::Md => "MD",
            StationKind::Cssd => "CSSD",
            StationKind::Ccsa => "CCSA",
            StationKind::Scsa => "SCSA",
            StationKind::OrCore => "OR_CORE",
            StationKind::Parking => "PARKING",
        }
    }
}

/// A pickup/drop-off area with a finite number of detents.
#[derive(Debug, Clone)]
pub struct Station {
    pub id: StationId,
    pub name: String,
    pub node: NodeId,
    pub kind: StationKind,
    pub detent_capacity: u32,
}

/// A floor-to-floor transfer point modeled as a capacity-constrained node
/// with door delays.
#[derive(Debug, Clone)]
pub struct Elevator {
    pub id: ElevatorId,
    pub name: String,
    pub node: NodeId,
    pub agv_capacity: u32,
    pub door_delay_s: f64,
    pub serves: Vec<CartState>,
}

/// A declared fixed route: an ordered chain of links for one cart state under
/// one variant, with an optional look-ahead stop.
#[derive(Debug, Clone)]
pub struct RouteSpec {
    pub cart_state: CartState,
    pub variant: Variant,
    pub links: Vec<LinkId>,
    pub lookahead: Option<(LinkId, u32)>,
}

/// The parsed, id-resolved network. Immutable after parse; replications share
/// it read-only.
#[derive(Debug, Clone)]
pub struct NetworkSpec {
    pub nodes: Vec<String>,
    pub links: Vec<Link>,
    pub stations: Vec<Station>,
    pub elevators: Vec<Elevator>,
    pub routes: Vec<RouteSpec>,
    pub variant: Variant,
}

impl NetworkSpec {
    pub fn node_name(&self, id: NodeId) -> &str {
        &self.nodes[id.index()]
    }

    pub fn link(&self, id: LinkId) -> &Link {
        &self.links[id.index()]
    }

    pub fn station(&self, id: StationId) -> &Station {
        &self.stations[id.index()]
    }

    pub fn elevator(&self, id: ElevatorId) -> &Elevator {
        &self.elevators[id.index()]
    }

    pub fn station_named(&self, name: &str) -> Option<&Station> {
        self.stations.iter().find(|s| s.name == name)
    }

    pub fn elevator_at(&self, node: NodeId) -> Option<&Elevator> {
        self.elevators.iter().find(|e| e.node == node)
    }

    pub fn station_at(&self, node: NodeId) -> Option<&Station> {
        self.stations.iter().find(|s| s.node == node)
    }

    /// Routes of the active variant, one per cart state.
    pub fn active_route(&self, state: CartState) -> Option<&RouteSpec> {
        self.routes
            .iter()
            .find(|r| r.variant == self.variant && r.cart_state == state)
    }

    /// Returns a copy whose active routes are those of `variant`.
    pub fn apply_variant(&self, variant: Variant) -> Result<NetworkSpec, LayoutError> {
        for state in CartState::ALL {
            if !self
                .routes
                .iter()
                .any(|r| r.variant == variant && r.cart_state == state)
            {
                return Err(LayoutError::MissingVariantRoute {
                    variant,
                    cart_state: state,
                });
            }
        }
        let mut spec = self.clone();
        spec.variant = variant;
        Ok(spec)
    }
}

#[derive(Debug, Error)]
pub enum LayoutError {
    #[error("layout syntax error: {0}")]
    Syntax(String),
    #[error("unknown node {0}")]
    UnknownNode(String),
    #[error("unknown link {0}")]
    UnknownLink(String),
    #[error("unknown {kind} `{id}`")]
    UnknownRef { kind: &'static str, id: String },
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },
    #[error("invalid {field} for {entity} `{id}`: {reason}")]
    InvalidField {
        entity: &'static str,
        id: String,
        field: &'static str,
        reason: String,
    },
    #[error("no routes declared for variant {variant} / {cart_state} carts")]
    MissingVariantRoute {
        variant: Variant,
        cart_state: CartState,
    },
    #[error("route for {cart_state}/{variant} is not traversable: {reason}")]
    BadRoute {
        cart_state: CartState,
        variant: Variant,
        reason: String,
    },
}
