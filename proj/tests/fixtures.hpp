// Reference values, transcribed verbatim.
#ifndef REVSTACK_TESTS_FIXTURES_HPP
#define REVSTACK_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

namespace fixture
{

// Exact rev-tier t = 0..n-2 by length n = 1..10.
inline const std::vector<std::vector<long long>> exact_table = {
  {1},
  {2},
  {5, 1},
  {14, 8, 2},
  {42, 47, 26, 5},
  {132, 248, 228, 96, 16},
  {429, 1249, 1702, 1178, 421, 61},
  {1430, 6154, 11704, 11840, 6816, 2102, 272},
  {4862, 30013, 76845, 106567, 88020, 43347, 11841, 1385},
  {16796, 145764, 490866, 896560, 997056, 697644, 302002, 74176, 7936},
};

// Rev-tier at most t for t = 0..8, lengths 1..10.
inline const std::vector<std::vector<long long>> cumulative_table = {
  {1, 1, 1, 1, 1, 1, 1, 1, 1},
  {2, 2, 2, 2, 2, 2, 2, 2, 2},
  {5, 6, 6, 6, 6, 6, 6, 6, 6},
  {14, 22, 24, 24, 24, 24, 24, 24, 24},
  {42, 89, 115, 120, 120, 120, 120, 120, 120},
  {132, 380, 608, 704, 720, 720, 720, 720, 720},
  {429, 1678, 3380, 4558, 4979, 5040, 5040, 5040, 5040},
  {1430, 7584, 19288, 31128, 37946, 40048, 40320, 40320, 40320},
  {4862, 34875, 111720, 218287, 306307, 349654, 361495, 362880, 362880},
  {16796, 162560, 653426, 1549986, 2547042, 3244686, 3546688, 3620864, 3628800},
};

inline const std::vector<std::string> basis_1 = {"2413", "2431", "23154"};
inline const std::vector<std::string> basis_2 = {"24153",  "24513",  "24531",  "42513",  "42531",  "231564",
                                                 "261453", "523164", "562413", "562431", "6723154"};
inline const std::map<int, std::size_t> basis_3_histogram = {{6, 16}, {7, 24}, {8, 11}, {9, 1}};

// Series coefficients from x^0.
inline const std::vector<long long> mu0 = {0, 0, 0, 1, 6, 26, 100, 365};
inline const std::vector<long long> mu1 = {0, 0, 0, 0, 2, 21, 148, 884, 4852, 25407, 129480, 649576};
inline const std::vector<long long> mu2 = {0, 0, 0, 0, 0, 10, 160, 1636, 13704, 102876, 722772, 4867904};
inline const std::vector<long long> tier2 = {0, 0, 0, 0, 2, 26, 228, 1702};

inline const std::vector<long long> euler = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936}; // E_0..E_9

} // namespace fixture

#endif // REVSTACK_TESTS_FIXTURES_HPP
