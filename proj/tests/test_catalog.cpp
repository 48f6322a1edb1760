#include "doctest.h"
// placeholder
