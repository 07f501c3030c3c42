// Copyright 2026 The netfail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETFAIL_PARALLEL_H_
#define NETFAIL_PARALLEL_H_

namespace netfail {

// Selects between the OpenMP kernel and the serial reference loop. Both must
// produce identical results; the serial path exists for tests and benchmarks.
enum class Execution { kSerial, kParallel };

// Worker count used by parallel kernels. Affects speed only.
void set_thread_count(int threads);
int thread_count();

}  // namespace netfail

#endif  // NETFAIL_PARALLEL_H_
