// SPDX-License-Identifier: Apache-2.0
//
// irsrelay - link-level simulator for IRS-aided multi-antenna relay networks
// Copyright (C) 2026 The irsrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSRELAY_BEAMFORMING_HPP
#define IRSRELAY_BEAMFORMING_HPP

#include "beamforming/ais.hpp"
#include "beamforming/irses.hpp"
#include "beamforming/nsp.hpp"
#include "beamforming/oracle.hpp"
#include "beamforming/second_slot.hpp"
#include "beamforming/types.hpp"

#endif
