//! Temporal network analysis over pluggable semirings.
//!
//! Link data is stored as [`tq::TemporalQuantity`] values (interval-coded
//! functions of time). Latencies are turned into first-arrival step functions
//! ([`first_arrival::StepFun`]) or into traveling pairs of first arrival and an
//! inner-semiring value ([`traveling::TravelFun`]). Matrix closures over those
//! elements give foremost arrivals and journey counts for every pair of nodes,
//! which feed the two betweenness centralities in [`centrality`].
//!
//! The [`oracle`] module enumerates dated journeys directly and is the ground
//! truth the algebraic route is checked against.

pub mod algebra;
pub mod centrality;
pub mod cli;
pub mod exec;
pub mod first_arrival;
pub mod matrix;
pub mod netio;
pub mod oracle;
pub mod time;
pub mod tq;
pub mod traveling;

pub use algebra::{Count, Element, Generalized, Geodetic, Length, Semiring, StarSemiring};
pub use exec::Exec;
pub use first_arrival::StepFun;
pub use matrix::SquareMatrix;
pub use netio::TemporalNetwork;
pub use time::Time;
pub use tq::{Interval, TemporalQuantity};
pub use traveling::TravelFun;
