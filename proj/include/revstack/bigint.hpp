#ifndef REVSTACK_BIGINT_HPP
#define REVSTACK_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace revstack
{

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace revstack

#endif // REVSTACK_BIGINT_HPP
