// Copyright 2026 The qscatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <exception>
#include <iostream>

#include "qscatter/selftest.hpp"

int main(int argc, char **argv) {
    const char *data_dir = argc > 1 ? argv[1] : QSCATTER_TEST_DATA_DIR;
    try {
        const qscatter::SelftestReport report = qscatter::run_selftest(data_dir);
        std::cout << report.text();
        return report.all_passed() ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << "acceptance: " << e.what() << "\n";
        return 1;
    }
}
