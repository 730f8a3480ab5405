//! Command-line companion to the `stargeo` core: text formats for
//! polynomials, points, lines, and configuration sessions; the runnable
//! check battery; and the subcommand dispatcher.

pub mod battery;
pub mod dispatch;
pub mod text;
