//! Detectors and certificates for induced structures: holes, suns, sunspots,
//! nets, bulls, sectors and flaps.

pub mod flaps;
pub mod holes;
pub mod patterns;

pub use flaps::{
    all_flaps_within, find_flap, find_flap_within, flap_violation_within, is_flapless,
    is_flapless_within, x_sectors, FlapWitness, SectorError,
};
pub use holes::{
    enumerate_holes, find_hole_min_length, find_hole_min_length_within, holes_within,
    longest_hole_length_within, HoleError, Holes,
};
pub use patterns::{
    find_4_sunspot, find_4_sunspot_within, find_bull, find_net, find_sun_within, find_t_sun,
    BullWitness, NetWitness, SunWitness, SunspotWitness,
};
