#include "smoothcvx/core/oracle.hpp"
