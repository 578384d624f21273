//! Velocity-profile timing for guided transporters.
//!
//! AGVs accelerate from rest, cruise at the link speed (halved on turning
//! segments) and decelerate to rest where a stop is required. Profile times
//! are closed-form trapezoids, falling back to the triangular profile when
//! the distance is too short to reach cruise speed.

/// Transporter motion parameters. Velocity is in feet per minute as reported
/// by vehicle handbooks; acceleration and deceleration are in ft/s².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicsParams {
    pub v_straight_ft_min: f64,
    pub turn_factor: f64,
    pub accel_ft_s2: f64,
    pub decel_ft_s2: f64,
}

impl KinematicsParams {
    pub fn validated(self) -> Result<Self, String> {
        if self.v_straight_ft_min <= 0.0 || self.accel_ft_s2 <= 0.0 || self.decel_ft_s2 <= 0.0 {
            return Err("kinematics parameters must be positive".into());
        }
        if !(0.0 < self.turn_factor && self.turn_factor <= 1.0) {
            return Err(format!(
                "turn factor must lie in (0, 1], got {}",
                self.turn_factor
            ));
        }
        Ok(self)
    }

    /// Peak speed in ft/s for a straight or turning segment.
    pub fn peak_speed_ft_s(&self, turning: bool) -> f64 {
        let v = self.v_straight_ft_min / 60.0;
        if turning {
            v * self.turn_factor
        } else {
            v
        }
    }
}

impl Default for KinematicsParams {
    fn default() -> Self {
        // Handbook values: 200 ft/min straight, turning factor 0.5,
        // 0.98 ft/s² acceleration and deceleration.
        Self {
            v_straight_ft_min: 200.0,
            turn_factor: 0.5,
            accel_ft_s2: 0.98,
            decel_ft_s2: 0.98,
        }
    }
}

/// Time in seconds to cover `distance_ft` starting from rest, with peak
/// speed capped by the straight/turning speed, decelerating back to rest
/// only when `stop_at_end` is set.
pub fn traverse_time(
    distance_ft: f64,
    params: &KinematicsParams,
    turning: bool,
    stop_at_end: bool,
) -> f64 {
    debug_assert!(distance_ft > 0.0);
    let v = params.peak_speed_ft_s(turning);
    let a = params.accel_ft_s2;
    let d = params.decel_ft_s2;
    if stop_at_end {
        // Distance consumed by a full accelerate-then-brake cycle at peak v.
        let ramp_dist = v * v / 2.0 * (1.0 / a + 1.0 / d);
        if distance_ft >= ramp_dist {
            v / (2.0 * a) + v / (2.0 * d) + distance_ft / v
        } else {
            // Triangular profile: peak speed the ramps alone allow.
            let v_peak = (2.0 * a * d * distance_ft / (a + d)).sqrt();
            v_peak / a + v_peak / d
        }
    } else {
        let accel_dist = v * v / (2.0 * a);
        if distance_ft >= accel_dist {
            v / (2.0 * a) + distance_ft / v
        } else {
            (2.0 * distance_ft / a).sqrt()
        }
    }
}

/// Extra time a start-from-rest adds over cruising the same distance.
pub fn start_excess_s(params: &KinematicsParams, peak_ft_s: f64) -> f64 {
    peak_ft_s / (2.0 * params.accel_ft_s2)
}

/// Extra time a stop-at-end adds over cruising the same distance.
pub fn stop_excess_s(params: &KinematicsParams, peak_ft_s: f64) -> f64 {
    peak_ft_s / (2.0 * params.decel_ft_s2)
}

#[cfg(test)]
mod unit {
    use super::*;

    #[test]
    fn trapezoid_reference_case() {
        // 100 ft at 200 ft/min with symmetric 0.98 ft/s² ramps.
        let k = KinematicsParams::default();
        let t = traverse_time(100.0, &k, false, true);
        assert!((t - 33.40).abs() < 0.01, "{t}");
    }

    #[test]
    fn triangular_boundary_case() {
        let k = KinematicsParams::default();
        let v = k.peak_speed_ft_s(false);
        let d = v * v / k.accel_ft_s2; // exactly the accel+decel distance
        let t = traverse_time(d, &k, false, true);
        assert!((t - 6.803).abs() < 0.005, "{t}");
    }

    #[test]
    fn turning_halves_peak_speed() {
        let k = KinematicsParams::default();
        assert!((k.peak_speed_ft_s(true) - 100.0 / 60.0).abs() < 1e-12);
        // Long distances: turning roughly doubles the cruise portion.
        let straight = traverse_time(1000.0, &k, false, true);
        let turning = traverse_time(1000.0, &k, true, true);
        assert!(turning > 1.9 * straight / 2.0 * 2.0 - straight);
        assert!(turning > straight);
    }

    #[test]
    fn no_stop_keeps_cruising() {
        let k = KinematicsParams::default();
        let with_stop = traverse_time(50.0, &k, false, true);
        let without = traverse_time(50.0, &k, false, false);
        let v = k.peak_speed_ft_s(false);
        assert!((with_stop - without - v / (2.0 * k.decel_ft_s2)).abs() < 1e-9);
    }

    #[test]
    fn excess_identities() {
        // Cruise time plus both ramp excesses equals the trapezoid time.
        let k = KinematicsParams::default();
        let v = k.peak_speed_ft_s(false);
        let d = 80.0;
        let composed = d / v + start_excess_s(&k, v) + stop_excess_s(&k, v);
        assert!((composed - traverse_time(d, &k, false, true)).abs() < 1e-9);
    }
}
