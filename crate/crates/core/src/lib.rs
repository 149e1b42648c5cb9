pub mod beatty;
pub mod catalog;
pub mod cli;
pub mod engine;
pub mod game;
pub mod numeration;
pub mod suites;
pub mod wythoff;
