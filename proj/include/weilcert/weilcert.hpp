#pragma once

#include "weilcert/certify.hpp"
#include "weilcert/error.hpp"
#include "weilcert/exactnum.hpp"
#include "weilcert/linalg.hpp"
#include "weilcert/multipoly.hpp"
#include "weilcert/parser.hpp"
#include "weilcert/resultant.hpp"
#include "weilcert/weil_model.hpp"
