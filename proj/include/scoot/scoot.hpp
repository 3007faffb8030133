// Copyright 2026 The Scoot Authors. All Rights Reserved.
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

#ifndef SCOOT_SCOOT_HPP_
#define SCOOT_SCOOT_HPP_

#include "scoot/config.hpp"
#include "scoot/cooccurrence.hpp"
#include "scoot/error.hpp"
#include "scoot/eval/judgment.hpp"
#include "scoot/eval/meta_measures.hpp"
#include "scoot/eval/spearman.hpp"
#include "scoot/features.hpp"
#include "scoot/image.hpp"
#include "scoot/io/image_io.hpp"
#include "scoot/io/manifest.hpp"
#include "scoot/io/report.hpp"
#include "scoot/parallel.hpp"
#include "scoot/quantize.hpp"
#include "scoot/score.hpp"
#include "scoot/statistics.hpp"
#include "scoot/transforms.hpp"
#include "scoot/version.hpp"

#endif  // SCOOT_SCOOT_HPP_
