//! Weyl groups of finite root systems, Bruhat order, parabolic double
//! cosets and orbit filtrations, with a brute-force `GL_n(F_q)` oracle.

pub mod bruhat;
pub mod error;
pub mod root_system;
pub mod weyl;
pub mod parabolic;
pub mod hasse;
pub mod orbit;
pub mod oracle;
pub mod verify;
pub mod cli;
