#pragma once

namespace polyk {

/// Least order of a polyhedral graph containing a k-independent set of size a.
///   a = 1           -> 4
///   k even, a >= 2  -> (3k/2 + 1) a
///   k odd           -> ceil(3a/2 + 2) + 3a(k-1)/2
/// Throws GraphError for k < 1 or a < 1.
long long p_formula(int k, int a);

/// ceil(3a/2 + 2), computed in integers.
long long p_one(int a);

}  // namespace polyk
