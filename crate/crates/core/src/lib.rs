//! Exact jet algebra, R(X)-classification of submersions on the I1 model
//! surface, and flat geometry of corank-1 surfaces in 4-space.

pub mod exec;
pub mod geometry;
pub mod heights;
pub mod jetalg;
pub mod modelsurface;
pub mod normalform;
pub mod rxclass;
