/*
 * Copyright 2026 The invpoly Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "invpoly/goldens.hpp"

#include <sstream>

namespace invpoly {

Poly GoldenEntry::poly() const {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return Poly::from_coeffs(std::move(c));
}

const std::vector<GoldenEntry>& golden_n10() {
  static const std::vector<GoldenEntry> kEntries = [] {
    std::vector<GoldenEntry> entries;
    entries.push_back({"I_d", "I", "d", 10,
       {1, 25, 289, 1397, 3036, 3036, 1397, 289, 25, 1}});
    entries.push_back({"I_exc", "I", "exc", 10,
       {1, 45, 630, 3150, 4725, 945}});
    entries.push_back({"I_maj", "I", "maj", 10,
       {1, 1, 2, 4, 7, 12, 19, 29, 44, 64, 89, 119,
        158, 201, 250, 304, 358, 412, 464, 508, 546, 572, 584, 584,
        572, 546, 508, 464, 412, 358, 304, 250, 201, 158, 119, 89,
        64, 44, 29, 19, 12, 7, 4, 2, 1, 1}});
    entries.push_back({"I_inv", "I", "inv", 10,
       {1, 9, 28, 43, 64, 98, 114, 165, 179, 234, 254, 299,
        333, 353, 408, 392, 471, 411, 513, 409, 529, 380, 517, 335,
        478, 281, 417, 225, 343, 171, 264, 124, 189, 85, 123, 56,
        72, 35, 37, 20, 16, 10, 5, 4, 1, 1}});
    entries.push_back({"IB_invB", "IB", "inv_B", 10,
       {1, 10, 36, 73, 157, 307, 456, 807, 1121, 1629, 2323, 2835,
        4124, 4508, 6468, 6715, 9256, 9469, 12333, 12712, 15500, 16306, 18560, 20048,
        21334, 23730, 23626, 27127, 25285, 29989, 26242, 32053, 26550, 33126, 26310, 33138,
        25641, 32124, 24639, 30194, 23393, 27534, 21953, 24364, 20369, 20935, 18657, 17519,
        16839, 14343, 14925, 11549, 12956, 9199, 10967, 7288, 9019, 5762, 7178, 4563,
        5525, 3633, 4107, 2909, 2962, 2331, 2084, 1858, 1444, 1460, 986, 1123,
        671, 834, 454, 589, 312, 394, 217, 255, 156, 156, 111, 91,
        79, 52, 56, 30, 40, 17, 26, 10, 15, 5, 5, 3,
        2, 3, 1, 3, 1}});
    entries.push_back({"ID_invD", "ID", "inv_D", 10,
       {1, 10, 35, 61, 97, 158, 204, 308, 370, 495, 595, 734,
        887, 1034, 1229, 1381, 1607, 1764, 2014, 2182, 2432, 2606, 2827, 3012,
        3175, 3377, 3451, 3663, 3654, 3863, 3781, 3970, 3819, 3964, 3766, 3859,
        3642, 3670, 3432, 3402, 3156, 3085, 2844, 2736, 2511, 2378, 2188, 2036,
        1877, 1707, 1568, 1396, 1284, 1128, 1035, 899, 818, 708, 642, 553,
        497, 428, 380, 322, 284, 236, 206, 168, 142, 116, 98, 81,
        68, 54, 46, 36, 32, 23, 21, 18, 14, 11, 8, 5,
        4, 2, 1, 2, 1, 3, 1}});
    entries.push_back({"IO_invD", "IO", "inv_D", 10,
       {1, 8, 23, 41, 77, 120, 180, 268, 332, 461, 547, 718,
        835, 1040, 1181, 1407, 1569, 1808, 1994, 2236, 2448, 2672, 2875, 3078,
        3245, 3421, 3545, 3679, 3758, 3847, 3877, 3926, 3899, 3906, 3826, 3797,
        3664, 3610, 3422, 3358, 3128, 3067, 2800, 2744, 2461, 2408, 2138, 2080,
        1835, 1759, 1542, 1446, 1268, 1164, 1025, 919, 812, 708, 634, 535,
        491, 400, 374, 296, 284, 218, 214, 156, 150, 110, 104, 81,
        72, 54, 46, 34, 28, 23, 17, 16, 10, 11, 6, 7,
        4, 4, 1, 2, 1, 1, 1}});
    return entries;
  }();
  return kEntries;
}

std::string golden_csv_line(const GoldenEntry& e) {
  std::ostringstream os;
  os << e.family << "," << e.n;
  for (long long c : e.coeffs) os << "," << c;
  return os.str();
}

}  // namespace invpoly
