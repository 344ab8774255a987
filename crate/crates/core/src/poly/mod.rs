pub mod bi;
pub mod uni;

pub use bi::{resultant_y, Poly2};
pub use uni::{interpolate, resultant, Poly1, UniError};
