//! Tables shipped with the library.

/// Order-3 table with kink map (23); its good involution (23) gives the
/// value `4u+4u^2+u^4` on the virtual Hopf link.
pub const TABLE_3: &str = "\
# order 3, kink map (23), characteristic 2
1 1 1 1 1 1 1 1 1
2 3 3 3 2 2 3 3 3
3 2 2 2 3 3 2 2 2
";

/// Order-4 table of characteristic 2 whose kink map (34) is also the good
/// involution used to separate links with equal counting invariant.
pub const TABLE_4: &str = "\
# order 4, kink map (34), characteristic 2
2 2 1 1 2 2 1 1 1 1 1 1
1 1 2 2 1 1 2 2 2 2 2 2
3 4 3 3 3 4 4 4 3 3 4 4
4 3 4 4 4 3 3 3 4 4 3 3
";

/// Constant action table for sigma = (12), tau = (12)(34), nu = (34).
pub const CONSTANT_ACTION_4: &str = "\
# constant action: sigma=(12) tau=(12)(34) nu=(34)
2 2 2 2 2 2 2 2 1 1 1 1
1 1 1 1 1 1 1 1 2 2 2 2
3 3 3 3 4 4 4 4 4 4 4 4
4 4 4 4 3 3 3 3 3 3 3 3
";
