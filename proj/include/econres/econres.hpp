#pragma once

#include "econres/exact.hpp"
#include "econres/group.hpp"
#include "econres/monomial.hpp"
#include "econres/fan.hpp"
#include "econres/rounddown.hpp"
#include "econres/brick.hpp"
#include "econres/stability.hpp"
#include "econres/chamber.hpp"
#include "econres/io.hpp"
#include "econres/verify.hpp"
